//! Lattice-point counts for the fixed polytopes `Pi_n^sigma` of the
//! permutahedron.
//!
//! The fixed polytope of a permutation with cycle type `(l_1, ..., l_m)` is a
//! half-integral translate of a zonotope whose half-open parallelotope tiles
//! are indexed by forests on `[m]`. Grouping forests by the set partition of
//! their components gives the weight `v_pi`, and a tile contributes to odd
//! dilates only when its affine span meets the integer lattice, which happens
//! exactly for lambda-compatible partitions.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::combinatorics::{forests_on, set_partitions, two_valuation, CycleType, Forest, SetPartition};
use crate::error::{Error, Result};
use crate::poly::IntegerPolynomial;

/// Largest `m` accepted by [`forest_sum_identity_check`] by default.
pub const DEFAULT_FOREST_BOUND: usize = 6;

/// A period-two quasipolynomial in `t`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Quasipolynomial {
    pub even: IntegerPolynomial,
    pub odd: IntegerPolynomial,
}

impl Quasipolynomial {
    pub fn branch(&self, t: u64) -> &IntegerPolynomial {
        if t.is_multiple_of(2) {
            &self.even
        } else {
            &self.odd
        }
    }

    pub fn eval(&self, t: u64) -> BigInt {
        self.branch(t).eval(&BigInt::from(t))
    }

    /// True when both branches coincide, i.e. the count is a polynomial.
    pub fn is_polynomial(&self) -> bool {
        self.even == self.odd
    }
}

fn parts_of<'a>(lambda: &'a CycleType, block: &'a [usize]) -> impl Iterator<Item = u64> + 'a {
    let parts = lambda.parts();
    block.iter().map(move |&j| u64::from(parts[j]))
}

fn check_ground_set(lambda: &CycleType, pi: &SetPartition) -> Result<()> {
    if pi.ground_size() != lambda.m() {
        return Err(Error::InvalidInput(format!(
            "set partition {pi} is on {} elements but {lambda} has {} parts",
            pi.ground_size(),
            lambda.m()
        )));
    }
    Ok(())
}

fn block_gcd(lambda: &CycleType, block: &[usize]) -> u64 {
    parts_of(lambda, block).fold(0, |acc, l| acc.gcd(&l))
}

fn block_is_compatible(lambda: &CycleType, block: &[usize]) -> bool {
    if parts_of(lambda, block).any(|l| l % 2 == 1) {
        return true;
    }
    let vals: Vec<u32> = parts_of(lambda, block)
        .map(|l| two_valuation(l).expect("parts are positive"))
        .collect();
    let min = *vals.iter().min().expect("blocks are nonempty");
    vals.iter().filter(|&&v| v == min).count() % 2 == 0
}

/// Whether every block contains an odd part or attains its minimum
/// 2-valuation an even number of times.
pub fn is_lambda_compatible(lambda: &CycleType, pi: &SetPartition) -> Result<bool> {
    check_ground_set(lambda, pi)?;
    Ok(pi.blocks().iter().all(|b| block_is_compatible(lambda, b)))
}

/// Whether the affine span of the tiles indexed by `pi` contains an integer
/// point: for each block, `gcd(l_j)` must divide `sum l_j (l_j + 1) / 2`.
///
/// This is evaluated by direct divisibility and shares no code with
/// [`is_lambda_compatible`].
pub fn affine_span_meets_lattice(lambda: &CycleType, pi: &SetPartition) -> Result<bool> {
    check_ground_set(lambda, pi)?;
    Ok(pi.blocks().iter().all(|block| {
        let g = BigInt::from(block_gcd(lambda, block));
        let rhs: BigInt = parts_of(lambda, block)
            .map(|l| BigInt::from(l) * BigInt::from(l + 1) / 2)
            .sum();
        rhs.is_multiple_of(&g)
    }))
}

/// `v_pi = prod_i gcd(l_j : j in B_i) * (sum_{j in B_i} l_j)^(|B_i| - 2)`.
pub fn v_pi(lambda: &CycleType, pi: &SetPartition) -> Result<BigInt> {
    check_ground_set(lambda, pi)?;
    Ok(pi.blocks().iter().fold(BigInt::one(), |acc, block| {
        if block.len() == 1 {
            // gcd(l) * l^(-1)
            return acc;
        }
        let sum: u64 = parts_of(lambda, block).sum();
        acc * BigInt::from(block_gcd(lambda, block)) * BigInt::from(sum).pow(block.len() as u32 - 2)
    }))
}

/// The Ehrhart quasipolynomial `t -> |t Pi_n^sigma ∩ Z^n|`.
///
/// Even branch: `sum_pi v_pi t^(m - |pi|)` over all set partitions of `[m]`.
/// Odd branch: the same sum restricted to lambda-compatible partitions.
pub fn ehrhart_quasipolynomial(lambda: &CycleType) -> Quasipolynomial {
    let m = lambda.m();
    let mut even = vec![BigInt::zero(); m];
    let mut odd = vec![BigInt::zero(); m];
    for pi in set_partitions(m).expect("cycle types have m >= 1") {
        let v = v_pi(lambda, &pi).expect("partition is on [m]");
        let degree = m - pi.len();
        if is_lambda_compatible(lambda, &pi).expect("partition is on [m]") {
            odd[degree] += &v;
        }
        even[degree] += v;
    }
    Quasipolynomial {
        even: IntegerPolynomial::new(even),
        odd: IntegerPolynomial::new(odd),
    }
}

/// Normalized (relative) volume `n^(m-2) * gcd(l_1, ..., l_m)`; a point has
/// volume 1.
pub fn volume(lambda: &CycleType) -> BigInt {
    let g = BigInt::from(lambda.gcd());
    match lambda.m() {
        // n^(-1) * n
        1 => BigInt::one(),
        m => BigInt::from(lambda.n()).pow(m as u32 - 2) * g,
    }
}

/// The fixed polytope has integer vertices iff every cycle is odd.
pub fn is_lattice(lambda: &CycleType) -> bool {
    lambda.is_all_odd()
}

/// Smallest `k >= 1` such that the affine span of `k Pi_n^sigma` contains a
/// lattice point. Either 1 or 2, decided by the one-block partition.
pub fn index(lambda: &CycleType) -> u32 {
    let whole = SetPartition::one_block(lambda.m());
    if affine_span_meets_lattice(lambda, &whole).expect("partition is on [m]") {
        1
    } else {
        2
    }
}

/// Normalized volume of the half-open parallelotope indexed by `forest`:
/// `prod_j l_j^(deg(j) - 1) * prod_T gcd(l_j : j in T)`, evaluated one
/// component at a time so every factor is an integer.
pub fn box_volume(lambda: &CycleType, forest: &Forest) -> Result<BigInt> {
    if forest.vertex_count() != lambda.m() {
        return Err(Error::InvalidInput(format!(
            "forest has {} vertices but {lambda} has {} parts",
            forest.vertex_count(),
            lambda.m()
        )));
    }
    let degrees = forest.degrees();
    let parts = lambda.parts();
    Ok(forest
        .components()
        .blocks()
        .iter()
        .fold(BigInt::one(), |acc, comp| {
            if comp.len() == 1 {
                // Isolated vertex: l^(-1) * gcd(l) = 1.
                return acc;
            }
            let degree_part = comp.iter().fold(BigInt::one(), |p, &j| {
                p * BigInt::from(parts[j]).pow(degrees[j] as u32 - 1)
            });
            acc * degree_part * BigInt::from(block_gcd(lambda, comp))
        }))
}

/// Checks by explicit enumeration that the forests whose components induce
/// `pi` have total weight `prod_i (sum_{j in B_i} l_j)^(|B_i| - 2)`, the
/// weight of a forest being `prod_j l_j^(deg(j) - 1)`.
///
/// Refuses when `m` exceeds `bound`.
pub fn forest_sum_identity_check(lambda: &CycleType, pi: &SetPartition, bound: usize) -> Result<bool> {
    check_ground_set(lambda, pi)?;
    let m = lambda.m();
    if m > bound {
        return Err(Error::Precondition(format!(
            "forest enumeration on {m} vertices exceeds the bound {bound}"
        )));
    }
    let parts = lambda.parts();
    let power = |base: u64, exp: i64| -> BigRational {
        let b = BigRational::from_integer(BigInt::from(base));
        if exp >= 0 {
            num_traits::pow(b, exp as usize)
        } else {
            num_traits::pow(b.recip(), (-exp) as usize)
        }
    };

    let lhs: BigRational = forests_on(m)?
        .into_iter()
        .filter(|f| &f.components() == pi)
        .map(|f| {
            f.degrees()
                .iter()
                .enumerate()
                .fold(BigRational::one(), |acc, (j, &d)| {
                    acc * power(u64::from(parts[j]), d as i64 - 1)
                })
        })
        .sum();
    let rhs = pi.blocks().iter().fold(BigRational::one(), |acc, block| {
        let sum: u64 = parts_of(lambda, block).sum();
        acc * power(sum, block.len() as i64 - 2)
    });
    Ok(lhs == rhs)
}
