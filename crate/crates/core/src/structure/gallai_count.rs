use num_rational::Rational64;
use serde::Serialize;

use super::gallai::is_gallai_forest;
use super::split::beta_t;
use crate::error::{Error, Result};
use crate::graph::{clique_number, Graph};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GallaiCount {
    #[serde(serialize_with = "ser_rational")]
    pub lhs: Rational64,
    #[serde(serialize_with = "ser_rational")]
    pub rhs: Rational64,
    pub holds: bool,
}

pub(crate) fn ser_rational<S: serde::Serializer>(r: &Rational64, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&r.to_string())
}

/// For a Gallai forest with `Δ <= k-1` and no `K_k`:
///
/// `(k-1)β_{k-1} + Σ_v (k-1-d(v)) >= 2(k-3)/(k-2)·|G| - (k-1)(k-4)/(k-2)·c(G)`.
pub fn gallai_count_check(forest: &Graph, k: usize) -> Result<GallaiCount> {
    if k < 6 {
        return Err(Error::argument(format!("k must be at least 6, got {k}")));
    }
    if !is_gallai_forest(forest).is_gallai {
        return Err(Error::argument("not a Gallai forest"));
    }
    if forest.max_degree() > k - 1 {
        return Err(Error::argument(format!(
            "maximum degree {} exceeds k-1 = {}",
            forest.max_degree(),
            k - 1
        )));
    }
    if clique_number(forest) >= k {
        return Err(Error::argument(format!("contains K_{k}")));
    }
    let k = k as i64;
    let n = forest.n() as i64;
    let c = forest.components().len() as i64;
    let slack: i64 = (0..forest.n())
        .map(|v| k - 1 - forest.degree(v) as i64)
        .sum();
    let lhs = Rational64::from_integer((k - 1) * beta_t(forest, (k - 1) as usize) as i64 + slack);
    let rhs = Rational64::new(2 * (k - 3) * n, k - 2) - Rational64::new((k - 1) * (k - 4) * c, k - 2);
    Ok(GallaiCount {
        holds: lhs >= rhs,
        lhs,
        rhs,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::make_named;

    #[test]
    fn k5_is_tight_at_six() {
        let r = gallai_count_check(&make_named("complete", &[5]).unwrap(), 6).unwrap();
        assert_eq!(r.lhs, Rational64::from_integer(5));
        assert_eq!(r.rhs, Rational64::from_integer(5));
        assert!(r.holds);
    }

    #[test]
    fn k1() {
        let r = gallai_count_check(&Graph::empty(1), 6).unwrap();
        assert_eq!((r.lhs, r.rhs), (Rational64::from_integer(5), Rational64::from_integer(-1)));
        assert!(r.holds);
    }

    #[test]
    fn preconditions() {
        let k6 = make_named("complete", &[6]).unwrap();
        assert!(gallai_count_check(&k6, 6).is_err());
        assert!(gallai_count_check(&Graph::empty(1), 5).is_err());
        let c4 = make_named("cycle", &[4]).unwrap();
        assert!(gallai_count_check(&c4, 6).is_err());
    }
}
