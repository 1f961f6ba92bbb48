//! Partitions, set partitions, labeled forests and the small pieces of
//! number theory that the Ehrhart formulas are built from.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;

use crate::error::{Error, Result};
use crate::poly::IntegerPolynomial;

/// An integer partition `(l_1 >= ... >= l_m)` of `n`, read as the cycle
/// lengths of a permutation. Also used as the label of an irreducible
/// character of `S_n`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CycleType {
    parts: Vec<u32>,
}

impl CycleType {
    /// Builds a cycle type from cycle lengths in any order; they are sorted
    /// into weakly decreasing order.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidInput("a cycle type needs at least one part".into()));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidInput(format!(
                "cycle lengths must be positive, got {parts:?}"
            )));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(CycleType { parts })
    }

    /// The cycle type `(1, ..., 1)` of the identity of `S_n`.
    pub fn identity(n: u32) -> Result<Self> {
        check_positive(n, "n")?;
        Ok(CycleType {
            parts: vec![1; n as usize],
        })
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn n(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn m(&self) -> usize {
        self.parts.len()
    }

    pub fn gcd(&self) -> u32 {
        self.parts.iter().fold(0, |acc, &l| acc.gcd(&l))
    }

    pub fn is_all_odd(&self) -> bool {
        self.parts.iter().all(|l| l % 2 == 1)
    }

    pub fn even_part_count(&self) -> usize {
        self.parts.iter().filter(|&&l| l % 2 == 0).count()
    }

    /// Multiplicity of each part size.
    pub fn multiplicities(&self) -> BTreeMap<u32, u32> {
        let mut out = BTreeMap::new();
        for &l in &self.parts {
            *out.entry(l).or_insert(0) += 1;
        }
        out
    }

    /// Comma-separated parts, the format accepted by [`FromStr`].
    pub fn to_csv(&self) -> String {
        self.parts
            .iter()
            .map(u32::to_string)
            .collect::<Vec<_>>()
            .join(",")
    }
}

impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.to_csv())
    }
}

impl FromStr for CycleType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim().trim_start_matches('(').trim_end_matches(')');
        let parts = trimmed
            .split(',')
            .map(|p| {
                let p = p.trim();
                p.parse::<u32>()
                    .map_err(|_| Error::InvalidInput(format!("bad cycle length {p:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        CycleType::new(parts)
    }
}

/// A set partition of `{0, ..., m-1}` (displayed one-based).
///
/// Canonical form: each block ascending, blocks ordered by their minimum.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SetPartition {
    m: usize,
    blocks: Vec<Vec<usize>>,
}

impl SetPartition {
    /// Validates and canonicalizes zero-based blocks covering `0..m`.
    pub fn from_blocks(m: usize, blocks: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = vec![false; m];
        let mut blocks: Vec<Vec<usize>> = blocks
            .into_iter()
            .map(|mut b| {
                b.sort_unstable();
                b
            })
            .collect();
        for block in &blocks {
            if block.is_empty() {
                return Err(Error::InvalidInput("set partition has an empty block".into()));
            }
            for &x in block {
                if x >= m || seen[x] {
                    return Err(Error::InvalidInput(format!(
                        "blocks {blocks:?} do not partition a {m}-element ground set"
                    )));
                }
                seen[x] = true;
            }
        }
        if seen.iter().any(|s| !s) {
            return Err(Error::InvalidInput(format!(
                "blocks {blocks:?} do not cover a {m}-element ground set"
            )));
        }
        blocks.sort_unstable_by_key(|b| b[0]);
        Ok(SetPartition { m, blocks })
    }

    /// The partition whose block labels are given by a restricted growth
    /// string.
    fn from_rgs(rgs: &[usize]) -> Self {
        let k = rgs.iter().max().map_or(0, |&x| x + 1);
        let mut blocks = vec![Vec::new(); k];
        for (i, &b) in rgs.iter().enumerate() {
            blocks[b].push(i);
        }
        SetPartition { m: rgs.len(), blocks }
    }

    pub fn one_block(m: usize) -> Self {
        SetPartition {
            m,
            blocks: vec![(0..m).collect()],
        }
    }

    pub fn singletons(m: usize) -> Self {
        SetPartition {
            m,
            blocks: (0..m).map(|i| vec![i]).collect(),
        }
    }

    pub fn ground_size(&self) -> usize {
        self.m
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// Number of blocks.
    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.m > 9 { "," } else { "" };
        let rendered: Vec<String> = self
            .blocks
            .iter()
            .map(|b| {
                b.iter()
                    .map(|x| (x + 1).to_string())
                    .collect::<Vec<_>>()
                    .join(sep)
            })
            .collect();
        f.write_str(&rendered.join("|"))
    }
}

/// A labeled forest on vertices `0..m`, edges stored as `(i, j)` with `i < j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Forest {
    m: usize,
    edges: Vec<(usize, usize)>,
}

impl Forest {
    /// Validates that the edges are well-formed and acyclic.
    pub fn new(m: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        let mut uf = UnionFind::new(m);
        let mut normalized = Vec::with_capacity(edges.len());
        for (a, b) in edges {
            let (i, j) = (a.min(b), a.max(b));
            if j >= m || i == j {
                return Err(Error::InvalidInput(format!(
                    "bad edge ({a}, {b}) on {m} vertices"
                )));
            }
            if !uf.union(i, j) {
                return Err(Error::InvalidInput("edge set contains a cycle".into()));
            }
            normalized.push((i, j));
        }
        normalized.sort_unstable();
        Ok(Forest { m, edges: normalized })
    }

    pub fn vertex_count(&self) -> usize {
        self.m
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.m];
        for &(i, j) in &self.edges {
            deg[i] += 1;
            deg[j] += 1;
        }
        deg
    }

    /// The set partition induced by the connected components.
    pub fn components(&self) -> SetPartition {
        let mut uf = UnionFind::new(self.m);
        for &(i, j) in &self.edges {
            uf.union(i, j);
        }
        let mut by_root: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for v in 0..self.m {
            by_root.entry(uf.find(v)).or_default().push(v);
        }
        SetPartition::from_blocks(self.m, by_root.into_values().collect())
            .expect("components always partition the vertex set")
    }

    pub fn is_spanning_tree(&self) -> bool {
        self.m >= 1 && self.edges.len() == self.m - 1
    }
}

#[derive(Clone)]
struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns false if `a` and `b` were already connected.
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra] = rb;
        true
    }
}

fn check_positive(value: u32, name: &str) -> Result<()> {
    if value == 0 {
        Err(Error::InvalidInput(format!("{name} must be positive")))
    } else {
        Ok(())
    }
}

/// All partitions of `n` in reverse-lexicographic order, starting at `(n)`.
pub fn partitions_of(n: u32) -> Result<Vec<CycleType>> {
    check_positive(n, "n")?;
    let mut out = Vec::new();
    let mut current = Vec::new();
    fill_partitions(n, n, &mut current, &mut out);
    Ok(out)
}

fn fill_partitions(remaining: u32, max_part: u32, current: &mut Vec<u32>, out: &mut Vec<CycleType>) {
    if remaining == 0 {
        out.push(CycleType {
            parts: current.clone(),
        });
        return;
    }
    for part in (1..=remaining.min(max_part)).rev() {
        current.push(part);
        fill_partitions(remaining - part, part, current, out);
        current.pop();
    }
}

/// All set partitions of an `m`-element set, enumerated by restricted growth
/// strings in lexicographic order (so the one-block partition comes first and
/// the all-singletons partition last).
pub fn set_partitions(m: usize) -> Result<Vec<SetPartition>> {
    if m == 0 {
        return Err(Error::InvalidInput("m must be positive".into()));
    }
    let mut out = Vec::new();
    let mut rgs = vec![0usize; m];
    loop {
        out.push(SetPartition::from_rgs(&rgs));
        // Increment the rightmost position that may still grow.
        let mut i = m - 1;
        loop {
            if i == 0 {
                return Ok(out);
            }
            let prefix_max = rgs[..i].iter().copied().max().unwrap_or(0);
            if rgs[i] <= prefix_max {
                rgs[i] += 1;
                for r in &mut rgs[i + 1..] {
                    *r = 0;
                }
                break;
            }
            i -= 1;
        }
    }
}

/// Every labeled forest on `m` vertices, including the empty forest.
pub fn forests_on(m: usize) -> Result<Vec<Forest>> {
    if m == 0 {
        return Err(Error::InvalidInput("m must be positive".into()));
    }
    let all_edges: Vec<(usize, usize)> = (0..m).flat_map(|i| (i + 1..m).map(move |j| (i, j))).collect();
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    extend_forests(m, &all_edges, 0, &UnionFind::new(m), &mut chosen, &mut out);
    Ok(out)
}

fn extend_forests(
    m: usize,
    all_edges: &[(usize, usize)],
    next: usize,
    uf: &UnionFind,
    chosen: &mut Vec<(usize, usize)>,
    out: &mut Vec<Forest>,
) {
    if next == all_edges.len() {
        out.push(Forest {
            m,
            edges: chosen.clone(),
        });
        return;
    }
    extend_forests(m, all_edges, next + 1, uf, chosen, out);
    let (i, j) = all_edges[next];
    let mut with_edge = uf.clone();
    if with_edge.union(i, j) {
        chosen.push((i, j));
        extend_forests(m, all_edges, next + 1, &with_edge, chosen, out);
        chosen.pop();
    }
}

/// Exponent of the largest power of two dividing `k`.
pub fn two_valuation(k: u64) -> Result<u32> {
    if k == 0 {
        return Err(Error::InvalidInput("2-valuation is undefined at 0".into()));
    }
    Ok(k.trailing_zeros())
}

/// The Eulerian polynomial `A_k(z)`, normalized by
/// `sum_{t>=0} t^k z^t = A_k(z) / (1-z)^(k+1)`, so `A_0 = 1` and `A_1 = z`.
pub fn eulerian_polynomial(k: u32) -> IntegerPolynomial {
    // Applying z d/dz to A_{k-1}/(1-z)^k gives
    // A_k = z(1-z) A_{k-1}' + k z A_{k-1}.
    let z = IntegerPolynomial::from_i64s(&[0, 1]);
    let z_one_minus_z = IntegerPolynomial::from_i64s(&[0, 1, -1]);
    let mut a = IntegerPolynomial::one();
    for j in 1..=k {
        a = &(&z_one_minus_z * &a.derivative()) + &(&z * &a).scale(&BigInt::from(j));
    }
    a
}

pub fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * i)
}

/// Size of the conjugacy class of `S_n` with the given cycle type,
/// `n! / prod_k k^{m_k} m_k!`.
pub fn class_size(lambda: &CycleType) -> BigInt {
    let centralizer = lambda
        .multiplicities()
        .into_iter()
        .fold(BigInt::one(), |acc, (k, mk)| {
            acc * BigInt::from(k).pow(mk) * factorial(mk)
        });
    factorial(lambda.n()) / centralizer
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ct(parts: &[u32]) -> CycleType {
        CycleType::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn partitions_of_three() {
        let ps = partitions_of(3).unwrap();
        assert_eq!(ps, vec![ct(&[3]), ct(&[2, 1]), ct(&[1, 1, 1])]);
        assert_eq!(partitions_of(1).unwrap(), vec![ct(&[1])]);
        assert_eq!(partitions_of(4).unwrap().len(), 5);
        assert!(partitions_of(0).is_err());
    }

    #[test]
    fn cycle_type_parsing_canonicalizes() {
        let l: CycleType = "1,2,1".parse().unwrap();
        assert_eq!(l.parts(), &[2, 1, 1]);
        assert_eq!(l.to_string(), "(2,1,1)");
        assert!("2,0".parse::<CycleType>().is_err());
        assert!("2,x".parse::<CycleType>().is_err());
        assert!("".parse::<CycleType>().is_err());
    }

    #[test]
    fn set_partitions_of_three_match_table_order() {
        let names: Vec<String> = set_partitions(3)
            .unwrap()
            .iter()
            .map(ToString::to_string)
            .collect();
        assert_eq!(names, ["123", "12|3", "13|2", "1|23", "1|2|3"]);
        assert_eq!(set_partitions(1).unwrap(), vec![SetPartition::singletons(1)]);
        assert_eq!(set_partitions(4).unwrap().len(), 15);
        assert!(set_partitions(0).is_err());
    }

    #[test]
    fn set_partition_validation() {
        assert!(SetPartition::from_blocks(3, vec![vec![0, 1], vec![1, 2]]).is_err());
        assert!(SetPartition::from_blocks(3, vec![vec![0, 1]]).is_err());
        assert!(SetPartition::from_blocks(2, vec![vec![0, 1], vec![]]).is_err());
        let p = SetPartition::from_blocks(3, vec![vec![2, 1], vec![0]]).unwrap();
        assert_eq!(p.blocks(), &[vec![0], vec![1, 2]]);
    }

    #[test]
    fn forests_on_three() {
        let fs = forests_on(3).unwrap();
        assert_eq!(fs.len(), 7);
        assert_eq!(fs.iter().filter(|f| f.edges().is_empty()).count(), 1);
        assert_eq!(fs.iter().filter(|f| f.edges().len() == 1).count(), 3);
        assert_eq!(fs.iter().filter(|f| f.is_spanning_tree()).count(), 3);
        assert_eq!(forests_on(1).unwrap().len(), 1);
        assert!(Forest::new(3, vec![(0, 1), (1, 2), (0, 2)]).is_err());
    }

    #[test]
    fn valuations() {
        assert_eq!(two_valuation(24).unwrap(), 3);
        assert_eq!(two_valuation(1).unwrap(), 0);
        assert_eq!(two_valuation(8).unwrap(), 3);
        assert!(two_valuation(0).is_err());
    }

    #[test]
    fn eulerian_small() {
        assert_eq!(eulerian_polynomial(0), IntegerPolynomial::one());
        assert_eq!(eulerian_polynomial(1), IntegerPolynomial::from_i64s(&[0, 1]));
        assert_eq!(eulerian_polynomial(2), IntegerPolynomial::from_i64s(&[0, 1, 1]));
        assert_eq!(
            eulerian_polynomial(3),
            IntegerPolynomial::from_i64s(&[0, 1, 4, 1])
        );
    }

    #[test]
    fn class_sizes_in_s4() {
        assert_eq!(class_size(&ct(&[1, 1, 1, 1])), BigInt::from(1));
        assert_eq!(class_size(&ct(&[2, 1, 1])), BigInt::from(6));
        let total: BigInt = partitions_of(4).unwrap().iter().map(class_size).sum();
        assert_eq!(total, BigInt::from(24));
    }
}
