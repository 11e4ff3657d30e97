//! From a large independent cover to a certificate of online choosability,
//! and the reducibility checks that use it.

mod certificate;
mod extract;
mod oc;

pub use certificate::Certificate;
pub use extract::{extract_reducible, extract_reducible_traced, Extraction};
pub use oc::{
    check_mic_strength, cut_lemma_check, is_oc_reducible, CutLemma, MicStrength, OcReduction, MAX_CUT_LEMMA_N,
    MAX_OC_N,
};
