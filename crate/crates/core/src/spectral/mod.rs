//! The Lie row of the spectral sequence, the nonvanishing certificate and the
//! first-page dimension tables.

mod certificate;
mod tables;
mod vspace;

pub use certificate::{certify_nonvanishing, Certificate, Check};
pub use tables::{
    betti_m0n, compact_betti_m0n, e1_table, epoly_m0n, f1_table, stratification_epoly_check, stratum_compact_betti, Cell,
    CellSource, EpolyReport, SpectralTable, TableKind,
};
pub use vspace::{edge_alphabet, multidegree, orientation, term_list, LeadingTerms, LieComplex, VSpaceElement};
