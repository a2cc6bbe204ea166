//! Schubert-cell combinatorics for pairs of Grassmannians.
//!
//! A partition `λ` in a `k × (n−k)` box is encoded as a bit string with `k`
//! ones; two such strings add up to a [`Coloring`] over Black/Grey/White.
//! The Borel orbits inside the product of two Schubert cells are labelled by
//! involutions whose arcs all run from a Black vertex to a White vertex on
//! its right ([`ConsistentInvolution`]).

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{input, Error, Result};
use crate::involution::{
    arc_diagram, enumerate_involutions, melnikov_leq, HalflinePolicy, Involution,
    MAX_ENUMERATION_N,
};
use crate::poset::Poset;

/// Largest `n` accepted by [`verify_restriction_theorem`].
pub const MAX_VERIFY_N: usize = 8;

/// A Young diagram fitting in a `k × (n − k)` box.
///
/// `parts` always has exactly `k` entries, padded with zeros.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Partition {
    parts: Vec<usize>,
    k: usize,
    n: usize,
}

impl Partition {
    pub fn new(parts: &[usize], k: usize, n: usize) -> Result<Self> {
        if k > n {
            return Err(input(format!("k = {k} exceeds n = {n}")));
        }
        if parts.len() > k {
            return Err(input(format!(
                "partition {parts:?} has more than k = {k} parts"
            )));
        }
        if parts.windows(2).any(|p| p[0] < p[1]) {
            return Err(input(format!("partition {parts:?} is not weakly decreasing")));
        }
        if let Some(&first) = parts.first() {
            if first > n - k {
                return Err(input(format!(
                    "part {first} exceeds n - k = {}",
                    n - k
                )));
            }
        }
        let mut padded = parts.to_vec();
        padded.resize(k, 0);
        Ok(Partition { parts: padded, k, n })
    }

    pub fn empty(k: usize, n: usize) -> Result<Self> {
        Partition::new(&[], k, n)
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `|λ|`, the dimension of the Schubert cell.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Positions `λ_k + 1, λ_{k−1} + 2, …, λ_1 + k`, increasing.
    pub fn vertical_steps(&self) -> Vec<usize> {
        (1..=self.k).map(|i| self.parts[self.k - i] + i).collect()
    }

    pub fn bitstring(&self) -> BitString {
        let mut bits = vec![false; self.n];
        for p in self.vertical_steps() {
            bits[p - 1] = true;
        }
        BitString { bits }
    }

    /// The partition whose bit string is `s`.
    pub fn from_bitstring(s: &BitString, k: usize) -> Result<Self> {
        let ones: Vec<usize> = s.ones();
        if ones.len() != k {
            return Err(input(format!(
                "bit string {s} has {} ones, expected {k}",
                ones.len()
            )));
        }
        // ones[i-1] = λ_{k-i+1} + i
        let parts: Vec<usize> = (1..=k).rev().map(|i| ones[i - 1] - i).collect();
        Partition::new(&parts, k, s.len())
    }

    /// Every partition in the `k × (n − k)` box, in lexicographic order of
    /// the padded parts.
    pub fn all_in_box(k: usize, n: usize) -> Result<Vec<Partition>> {
        if k > n {
            return Err(input(format!("k = {k} exceeds n = {n}")));
        }
        let mut out = Vec::new();
        let mut current = Vec::with_capacity(k);
        fill_parts(k, n - k, &mut current, &mut out);
        out.sort();
        Ok(out
            .into_iter()
            .map(|parts| Partition { parts, k, n })
            .collect())
    }
}

fn fill_parts(k: usize, max: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if current.len() == k {
        out.push(current.clone());
        return;
    }
    for p in 0..=max {
        current.push(p);
        fill_parts(k, p, current, out);
        current.pop();
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition{self} in {}x{} box", self.k, self.n - self.k)
    }
}

/// A 0/1 sequence; bit `i` (1-based) is set when the `i`-th step of the
/// boundary path of a Young diagram is vertical.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitString {
    bits: Vec<bool>,
}

impl BitString {
    pub fn new(bits: &[u8]) -> Result<Self> {
        bits.iter()
            .map(|&b| match b {
                0 => Ok(false),
                1 => Ok(true),
                other => Err(input(format!("bit value {other} is not 0 or 1"))),
            })
            .collect::<Result<Vec<_>>>()
            .map(|bits| BitString { bits })
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    /// Bit `i`, 1-based.
    pub fn bit(&self, i: usize) -> bool {
        self.bits[i - 1]
    }

    pub fn values(&self) -> Vec<u8> {
        self.bits.iter().map(|&b| u8::from(b)).collect()
    }

    /// 1-based positions of the ones.
    pub fn ones(&self) -> Vec<usize> {
        (1..=self.len()).filter(|&i| self.bit(i)).collect()
    }
}

impl fmt::Display for BitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.values().iter().map(ToString::to_string).collect();
        write!(f, "({})", s.join(","))
    }
}

impl fmt::Debug for BitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitString{self}")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Color {
    /// Value 0: neither bit string has a one here.
    Black,
    /// Value 1.
    Grey,
    /// Value 2: both bit strings have a one here.
    White,
}

impl Color {
    pub fn value(self) -> u8 {
        match self {
            Color::Black => 0,
            Color::Grey => 1,
            Color::White => 2,
        }
    }

    pub fn from_value(v: u8) -> Result<Self> {
        match v {
            0 => Ok(Color::Black),
            1 => Ok(Color::Grey),
            2 => Ok(Color::White),
            other => Err(input(format!("color value {other} is not 0, 1 or 2"))),
        }
    }

    pub fn is_grey(self) -> bool {
        self == Color::Grey
    }
}

/// Componentwise sum `s(λ) + s(μ)` of two bit strings, read as colors.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Coloring {
    colors: Vec<Color>,
}

impl Coloring {
    /// Any word over {0,1,2} is a sum of two bit strings, so only the
    /// alphabet is checked.
    pub fn from_values(values: &[u8]) -> Result<Self> {
        let colors = values
            .iter()
            .map(|&v| Color::from_value(v))
            .collect::<Result<Vec<_>>>()?;
        Ok(Coloring { colors })
    }

    pub fn from_partitions(lambda: &Partition, mu: &Partition) -> Result<Self> {
        if lambda.n() != mu.n() {
            return Err(Error::SizeMismatch {
                left: lambda.n(),
                right: mu.n(),
            });
        }
        let (a, b) = (lambda.bitstring(), mu.bitstring());
        let values: Vec<u8> = a.values().iter().zip(b.values()).map(|(x, y)| x + y).collect();
        Coloring::from_values(&values)
    }

    pub fn n(&self) -> usize {
        self.colors.len()
    }

    /// Color of vertex `i`, 1-based.
    pub fn color(&self, i: usize) -> Color {
        self.colors[i - 1]
    }

    pub fn values(&self) -> Vec<u8> {
        self.colors.iter().map(|c| c.value()).collect()
    }

    fn positions(&self, c: Color) -> Vec<usize> {
        (1..=self.n()).filter(|&i| self.color(i) == c).collect()
    }

    pub fn blacks(&self) -> Vec<usize> {
        self.positions(Color::Black)
    }

    pub fn whites(&self) -> Vec<usize> {
        self.positions(Color::White)
    }

    pub fn greys(&self) -> Vec<usize> {
        self.positions(Color::Grey)
    }

    /// Pairs `(i, j)`, `i < j`, with `i` Black and `j` White, sorted.
    pub fn black_white_pairs(&self) -> Vec<(usize, usize)> {
        let whites = self.whites();
        self.blacks()
            .into_iter()
            .flat_map(|i| whites.iter().filter(move |&&j| j > i).map(move |&j| (i, j)))
            .collect()
    }
}

impl fmt::Display for Coloring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.values().iter().map(ToString::to_string).collect();
        write!(f, "({})", s.join(","))
    }
}

impl fmt::Debug for Coloring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Coloring{self}")
    }
}

/// An involution all of whose arcs go from a Black vertex to a White vertex
/// further right.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ConsistentInvolution {
    w: Involution,
    coloring: Coloring,
}

impl ConsistentInvolution {
    pub fn new(w: Involution, coloring: Coloring) -> Result<Self> {
        if w.n() != coloring.n() {
            return Err(Error::SizeMismatch {
                left: w.n(),
                right: coloring.n(),
            });
        }
        for (i, j) in w.arcs() {
            if coloring.color(i) != Color::Black || coloring.color(j) != Color::White {
                return Err(input(format!(
                    "arc {i}-{j} of {w} does not run from a Black to a White vertex in {coloring}"
                )));
            }
        }
        Ok(ConsistentInvolution { w, coloring })
    }

    pub fn involution(&self) -> &Involution {
        &self.w
    }

    pub fn coloring(&self) -> &Coloring {
        &self.coloring
    }

    pub fn into_involution(self) -> Involution {
        self.w
    }
}

impl fmt::Display for ConsistentInvolution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.w)
    }
}

impl fmt::Debug for ConsistentInvolution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} @ {}", self.w, self.coloring)
    }
}

/// All involutions consistent with `coloring`, sorted lexicographically by
/// one-line notation. The identity is always first.
pub fn consistent_involutions(coloring: &Coloring) -> Vec<ConsistentInvolution> {
    let n = coloring.n();
    let blacks = coloring.blacks();
    let whites = coloring.whites();
    let mut used = vec![false; whites.len()];
    let mut arcs = Vec::new();
    let mut found = Vec::new();
    match_blacks(&blacks, &whites, 0, &mut used, &mut arcs, &mut |arcs| {
        found.push(Involution::from_arcs(n, arcs).expect("disjoint arcs"));
    });
    found.sort();
    found
        .into_iter()
        .map(|w| ConsistentInvolution {
            w,
            coloring: coloring.clone(),
        })
        .collect()
}

fn match_blacks(
    blacks: &[usize],
    whites: &[usize],
    next: usize,
    used: &mut [bool],
    arcs: &mut Vec<(usize, usize)>,
    emit: &mut dyn FnMut(&[(usize, usize)]),
) {
    if next == blacks.len() {
        emit(arcs);
        return;
    }
    let b = blacks[next];
    match_blacks(blacks, whites, next + 1, used, arcs, emit);
    for (idx, &wh) in whites.iter().enumerate() {
        if wh > b && !used[idx] {
            used[idx] = true;
            arcs.push((b, wh));
            match_blacks(blacks, whites, next + 1, used, arcs, emit);
            arcs.pop();
            used[idx] = false;
        }
    }
}

/// `I_n(λ, μ)`.
pub fn enumerate_consistent(
    lambda: &Partition,
    mu: &Partition,
) -> Result<Vec<ConsistentInvolution>> {
    Ok(consistent_involutions(&Coloring::from_partitions(lambda, mu)?))
}

/// Codimension of the orbit inside its cell: crossings of the colored arc
/// diagram (half-lines only at Black/White fixed points) plus the number of
/// Black-before-White pairs of fixed points.
pub fn codimension_d(cw: &ConsistentInvolution) -> usize {
    let c = cw.coloring();
    let diagram = arc_diagram(cw.involution(), HalflinePolicy::ColoredOnly(c));
    let fixed_pairs = c
        .black_white_pairs()
        .into_iter()
        .filter(|&(i, j)| cw.involution().is_fixed(i) && cw.involution().is_fixed(j))
        .count();
    diagram.crossings() + fixed_pairs
}

/// Arc counts `r(i, j)` indexed by Black–White pairs only.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RestrictedRankTable {
    pub entries: BTreeMap<(usize, usize), u32>,
}

impl RestrictedRankTable {
    pub fn get(&self, i: usize, j: usize) -> Option<u32> {
        self.entries.get(&(i, j)).copied()
    }
}

/// For each Black–White pair `(i, j)`, the number of arcs lying inside
/// `[i, j]`.
pub fn restricted_rank_table(cw: &ConsistentInvolution) -> RestrictedRankTable {
    let arcs = cw.involution().arcs();
    let entries = cw
        .coloring()
        .black_white_pairs()
        .into_iter()
        .map(|(i, j)| {
            let inside = arcs.iter().filter(|&&(a, b)| i <= a && b <= j).count() as u32;
            ((i, j), inside)
        })
        .collect();
    RestrictedRankTable { entries }
}

/// Closure order inside one product of Schubert cells.
pub fn restricted_leq(cv: &ConsistentInvolution, cw: &ConsistentInvolution) -> Result<bool> {
    if cv.coloring() != cw.coloring() {
        return Err(input(format!(
            "colorings differ: {} vs {}",
            cv.coloring(),
            cw.coloring()
        )));
    }
    let (a, b) = (restricted_rank_table(cv), restricted_rank_table(cw));
    Ok(a.entries.iter().all(|(key, v)| v <= &b.entries[key]))
}

/// Label of the open orbit: Black vertices opened and White vertices closed
/// in a single left-to-right stack pass, Grey vertices skipped.
pub fn max_orbit_involution(c: &Coloring) -> ConsistentInvolution {
    let mut open = Vec::new();
    let mut arcs = Vec::new();
    for i in 1..=c.n() {
        match c.color(i) {
            Color::Black => open.push(i),
            Color::White => {
                if let Some(b) = open.pop() {
                    arcs.push((b, i));
                }
            }
            Color::Grey => {}
        }
    }
    ConsistentInvolution {
        w: Involution::from_arcs(c.n(), &arcs).expect("stack arcs are disjoint"),
        coloring: c.clone(),
    }
}

/// Label of the closed orbit: the identity.
pub fn min_orbit_involution(c: &Coloring) -> ConsistentInvolution {
    ConsistentInvolution {
        w: Involution::identity(c.n()),
        coloring: c.clone(),
    }
}

/// A pair on which the restricted order and the closure order on `I_n`
/// disagree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RestrictionCounterexample {
    pub lambda: Partition,
    pub mu: Partition,
    pub v: Involution,
    pub w: Involution,
    pub restricted: bool,
    pub melnikov: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RestrictionReport {
    pub n_max: usize,
    /// Number of `(λ, μ)` pairs visited.
    pub cells: usize,
    /// Number of ordered pairs `(v, w)` compared.
    pub pairs: usize,
    pub counterexample: Option<RestrictionCounterexample>,
}

impl RestrictionReport {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

/// Every `(λ, μ)` with `λ` in a `k × (n−k)` box and `μ` in an `m × (n−m)`
/// box, `0 <= k, m <= n`, in a fixed order.
pub fn all_partition_pairs(n: usize) -> Result<Vec<(Partition, Partition)>> {
    let mut out = Vec::new();
    for k in 0..=n {
        let lambdas = Partition::all_in_box(k, n)?;
        for m in 0..=n {
            let mus = Partition::all_in_box(m, n)?;
            for lambda in &lambdas {
                for mu in &mus {
                    out.push((lambda.clone(), mu.clone()));
                }
            }
        }
    }
    Ok(out)
}

/// Checks, for every `n <= n_max` and every `(λ, μ)`, that the restricted
/// order on `I_n(λ, μ)` equals the closure order of `I_n` restricted to it.
/// Stops at the first disagreement.
pub fn verify_restriction_theorem(n_max: usize) -> Result<RestrictionReport> {
    if n_max > MAX_VERIFY_N {
        return Err(Error::Capacity {
            requested: n_max,
            limit: MAX_VERIFY_N,
        });
    }
    let mut report = RestrictionReport {
        n_max,
        cells: 0,
        pairs: 0,
        counterexample: None,
    };
    for n in 1..=n_max {
        for (lambda, mu) in all_partition_pairs(n)? {
            report.cells += 1;
            let elems = enumerate_consistent(&lambda, &mu)?;
            for v in &elems {
                for w in &elems {
                    report.pairs += 1;
                    let restricted = restricted_leq(v, w)?;
                    let melnikov = melnikov_leq(v.involution(), w.involution())?;
                    if restricted != melnikov {
                        report.counterexample = Some(RestrictionCounterexample {
                            lambda,
                            mu,
                            v: v.involution().clone(),
                            w: w.involution().clone(),
                            restricted,
                            melnikov,
                        });
                        return Ok(report);
                    }
                }
            }
        }
    }
    Ok(report)
}

/// A cover `lower ⋖ upper` of the restricted poset that is not a cover in
/// `I_n`, with the elements of `I_n` strictly between them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BrokenCover {
    pub lower: Involution,
    pub upper: Involution,
    pub intermediates: Vec<Involution>,
}

/// Covers of `(I_n(λ, μ), restricted order)` that stop being covers in
/// `(I_n, closure order)`.
pub fn covering_comparison(lambda: &Partition, mu: &Partition) -> Result<Vec<BrokenCover>> {
    let elems = enumerate_consistent(lambda, mu)?;
    let n = lambda.n();
    if n > MAX_ENUMERATION_N {
        return Err(Error::Capacity {
            requested: n,
            limit: MAX_ENUMERATION_N,
        });
    }
    let restricted = Poset::build(elems, |a, b| restricted_leq(a, b).expect("same coloring"))?;
    let everything = enumerate_involutions(n)?;
    let mut broken = Vec::new();
    for &(lo, hi) in restricted.covers() {
        let lower = restricted.element(lo).involution();
        let upper = restricted.element(hi).involution();
        let intermediates: Vec<Involution> = everything
            .iter()
            .filter(|x| *x != lower && *x != upper)
            .filter(|x| {
                melnikov_leq(lower, x).expect("same n") && melnikov_leq(x, upper).expect("same n")
            })
            .cloned()
            .collect();
        if !intermediates.is_empty() {
            broken.push(BrokenCover {
                lower: lower.clone(),
                upper: upper.clone(),
                intermediates,
            });
        }
    }
    Ok(broken)
}
