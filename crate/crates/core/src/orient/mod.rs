//! Orientations: in-degree constrained orientations by max-flow, the
//! kernel-perfect construction from an independent set, kernels, Alon-Tarsi
//! counts, and the f-AT / f-KP deciders.

mod alon_tarsi;
mod digraph;
mod flow;
mod kernel;
mod kp;

pub use alon_tarsi::{alon_tarsi_diff, is_f_at, AtOutcome, EulerianCounts, MAX_AT_ARCS, MAX_AT_EDGES};
pub use digraph::Digraph;
pub use flow::{orient_with_indegrees, OrientationResult};
pub use kernel::{
    build_kernel_perfect, find_kernel, find_kernel_within, is_kernel, is_kernel_perfect,
    is_kernel_perfect_on, KernelPerfectBuild, KernelPerfectness, MAX_KERNEL_PERFECT_N,
};
pub use kp::{
    extend_d0_kp, extend_d0_kp_fully, is_f_kp, kp_witnesses, KpOutcome, SupergraphMode, MAX_KP_N,
};

pub(crate) use kernel::{build_on, exhaustive_kernel};
