//! Exact equivariant Ehrhart theory of the permutahedron `Pi_n` under the
//! action of `S_n`.
//!
//! For a permutation of cycle type `lambda`, the crate computes the Ehrhart
//! quasipolynomial of the fixed polytope `Pi_n^sigma`, its Ehrhart series and
//! the equivariant series as exact rational functions, and decomposes the
//! coefficients of the latter into irreducible characters. A brute-force
//! lattice-point counter in [`oracle`] checks the formulas from first
//! principles.
//!
//! ```
//! use ehrhart_core::{ehrhart_quasipolynomial, phi_series, CycleType};
//!
//! let lambda: CycleType = "2,1,1".parse().unwrap();
//! let q = ehrhart_quasipolynomial(&lambda);
//! assert_eq!(q.even.to_string_descending("t"), "4t^2+3t+1");
//! assert_eq!(q.odd.to_string_descending("t"), "4t^2+2t");
//! assert!(!phi_series(&lambda).is_polynomial());
//! ```

pub mod characters;
pub mod combinatorics;
pub mod error;
pub mod fixed_polytope;
pub mod oracle;
pub mod poly;
pub mod series;

pub use characters::{
    check_conjecture_12_2, check_conjecture_12_3, check_conjecture_12_4, decompose, h_star,
    irreducible_character, is_effective, is_polynomial, phi_at_one_formula, phi_data, CharacterDecomposition,
    CharacterTable, ClassFunction, Conjecture, ConjectureReport, IrrepLabel, PhiData,
};
pub use combinatorics::{
    class_size, eulerian_polynomial, forests_on, partitions_of, set_partitions, two_valuation, CycleType,
    Forest, SetPartition,
};
pub use error::{Error, Result};
pub use fixed_polytope::{
    affine_span_meets_lattice, box_volume, ehrhart_quasipolynomial, forest_sum_identity_check, index,
    is_lambda_compatible, is_lattice, v_pi, volume, Quasipolynomial,
};
pub use oracle::{
    count_fixed_lattice_points, count_fixed_lattice_points_with_budget, count_for_cycle_lengths,
    in_dilated_permutahedron, oracle_sweep, Budget, SweepReport,
};
pub use poly::IntegerPolynomial;
pub use series::{
    ehrhart_series, phi_series, polynomiality_predicate, series_coefficients, PartialFractionTail,
    RationalFunction,
};
