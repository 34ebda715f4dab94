//! Exact computations around the Gini index of integer partitions.
//!
//! The crate covers the combinatorial side (partitions, dominance order,
//! tableaux, charge), the algebraic side (Kostka-Foulkes polynomials, an
//! independent symmetric-function oracle, Molien sums over dihedral groups)
//! and the statistics built on top (generating functions, level sets and
//! exact expected values). All arithmetic is exact.

pub mod cyclotomic;
pub mod error;
pub mod gini;
pub mod json;
pub mod kostka;
pub mod partition;
pub mod poly;
pub mod reflection;
pub mod series;
pub mod symfunc;
pub mod tableau;

pub use cyclotomic::CyclotomicElement;
pub use error::{Error, Result};
pub use gini::{
    b_stat, e2, gini, gini_nk, lorenz_points, normalized_gini, LorenzPoint, LorenzSample,
};
pub use kostka::{kostka_foulkes, kostka_number};
pub use num_bigint::BigInt;
pub use num_rational::BigRational;
pub use partition::{
    conjugate, covers, dominates, enumerate_partitions, enumerate_partitions_bounded,
    partition_count, Partition,
};
pub use poly::IntPolynomial;
pub use reflection::{
    dihedral_gini, dihedral_graded_multiplicity, gl_gini, gl_graded_multiplicity, sym_gini,
    sym_graded_multiplicity, CharacterKind, DihedralCharacter, DominantWeight, GlGini,
};
pub use series::{
    antichain_lower_bound, divisor_sum, expected_value, expected_value_csv,
    expected_value_normalized, expected_value_rows, first_monotonicity_violation, format_decimal,
    genfun_coefficient, gini_sum, max_level_set_size, ExpectedValueRow,
};
pub use symfunc::{
    hall_littlewood, kostka_foulkes_via_transition, monomial_sym, schur, MultiPoly,
};
pub use tableau::{
    charge, charge_tableau, enumerate_ssyt, enumerate_standard, hook_lengths, hook_product,
    reading_word, standard_count, Tableau, Word,
};
