//! Matrix and subspace realizations of orbit labels.
//!
//! This is where the two settings meet: the slice through a product of
//! Schubert cells is parametrized by one rational per Black–White pair, and
//! the same parameters, written into a matrix, give a square-zero
//! upper-triangular matrix whose orbit is read off from southwestern ranks.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{input, Error, Result};
use crate::grassmann::{BitString, Color, Coloring, ConsistentInvolution, Partition};
use crate::involution::{involution_from_rank_table, Involution, RankTable};
use crate::linalg::{integer, unit_vector, RationalMatrix, Subspace};

/// `w_<`: the 0/1 matrix with a one at `(i, w(i))` for every arc `i < w(i)`.
pub fn strict_upper_from_involution(w: &Involution) -> RationalMatrix {
    let n = w.n();
    let mut m = RationalMatrix::zeros(n, n);
    for (i, j) in w.arcs() {
        m.set(i, j, BigRational::one());
    }
    m
}

pub fn is_square_zero(x: &RationalMatrix) -> Result<bool> {
    if !x.is_square() {
        return Err(input(format!(
            "{}x{} matrix is not square",
            x.rows(),
            x.cols()
        )));
    }
    Ok(x.mul(x)?.is_zero())
}

/// `r(i, j)` = rank of the submatrix on rows `i..=n` and columns `1..=j`.
pub fn southwest_rank_table(x: &RationalMatrix) -> Result<RankTable> {
    if !x.is_strictly_upper_triangular() {
        return Err(input("expected a square strictly upper-triangular matrix"));
    }
    let n = x.rows();
    Ok(RankTable::from_fn(n, |i, j| x.submatrix(i, n, 1, j).rank() as u32))
}

/// `b · x · b⁻¹`.
pub fn conjugate(b: &RationalMatrix, x: &RationalMatrix) -> Result<RationalMatrix> {
    if b.rows() != x.rows() || !x.is_square() {
        return Err(Error::SizeMismatch {
            left: b.rows(),
            right: x.rows(),
        });
    }
    let inv = b.inverse_upper_triangular()?;
    b.mul(x)?.mul(&inv)
}

/// A deterministic invertible upper-triangular integer matrix with entries in
/// `[-3, 3]` and a nonzero diagonal.
pub fn random_borel(n: usize, seed: u64) -> RationalMatrix {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut b = RationalMatrix::zeros(n, n);
    for i in 1..=n {
        for j in i..=n {
            let v = if i == j {
                let mag = rng.gen_range(1..=3i64);
                if rng.gen_bool(0.5) {
                    -mag
                } else {
                    mag
                }
            } else {
                rng.gen_range(-3..=3i64)
            };
            b.set(i, j, integer(v));
        }
    }
    b
}

/// Orbit label of a square-zero strictly upper-triangular matrix.
pub fn identify_orbit(x: &RationalMatrix) -> Result<Involution> {
    if !is_square_zero(x)? {
        return Err(input("matrix does not square to zero"));
    }
    let table = southwest_rank_table(x)?;
    involution_from_rank_table(&table).map_err(|e| Error::Internal(e.to_string()))
}

/// Orbit representative `(U, W)` of `cw` in `X°_λ × X°_μ`:
/// `U` is spanned by `e_j` for fixed `j` with `s_j(λ) = 1` and by
/// `e_{w(j)} + e_j` for the other `j` with `s_j(λ) = 1`; `W = U_μ`.
pub fn canonical_pair(
    cw: &ConsistentInvolution,
    lambda: &Partition,
    mu: &Partition,
) -> Result<(Subspace, Subspace)> {
    let coloring = Coloring::from_partitions(lambda, mu)?;
    if &coloring != cw.coloring() {
        return Err(input(format!(
            "{cw:?} does not carry the coloring {coloring} of {lambda}, {mu}"
        )));
    }
    let n = lambda.n();
    let w = cw.involution();
    let gens: Vec<Vec<BigRational>> = lambda
        .bitstring()
        .ones()
        .into_iter()
        .map(|j| {
            let mut v = unit_vector(n, j);
            if !w.is_fixed(j) {
                v[w.image(j) - 1] = BigRational::one();
            }
            v
        })
        .collect();
    let u = Subspace::spanned_by(n, &gens)?;
    let wsp = Subspace::coordinate(n, &mu.vertical_steps())?;
    Ok((u, wsp))
}

/// The partition `λ` with `V` in the Schubert cell `X°_λ`, read from the
/// positions `j` where `dim(V ∩ <e_1..e_j>)` jumps.
pub fn schubert_profile(v: &Subspace) -> Result<Partition> {
    let profile = v.flag_profile();
    let bits: Vec<u8> = profile.windows(2).map(|p| (p[1] - p[0]) as u8).collect();
    Partition::from_bitstring(&BitString::new(&bits)?, v.dim())
}

/// A point of the slice: one parameter `t(i, j)` per Black–White pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SlicePoint {
    coloring: Coloring,
    params: BTreeMap<(usize, usize), BigRational>,
}

impl SlicePoint {
    /// Fails unless the keys are exactly the Black–White pairs of `coloring`.
    pub fn new(coloring: Coloring, params: BTreeMap<(usize, usize), BigRational>) -> Result<Self> {
        let pairs = coloring.black_white_pairs();
        if let Some(bad) = params.keys().find(|k| !pairs.contains(k)) {
            return Err(input(format!(
                "({},{}) is not a Black-White pair of {coloring}",
                bad.0, bad.1
            )));
        }
        if params.len() != pairs.len() {
            return Err(input(format!(
                "expected {} parameters, got {}",
                pairs.len(),
                params.len()
            )));
        }
        Ok(SlicePoint { coloring, params })
    }

    /// Builds a point from a partial assignment; missing pairs are zero.
    pub fn with_defaults(
        coloring: Coloring,
        given: &BTreeMap<(usize, usize), BigRational>,
    ) -> Result<Self> {
        let pairs = coloring.black_white_pairs();
        if let Some(bad) = given.keys().find(|k| !pairs.contains(k)) {
            return Err(input(format!(
                "({},{}) is not a Black-White pair of {coloring}",
                bad.0, bad.1
            )));
        }
        let params = pairs
            .into_iter()
            .map(|p| (p, given.get(&p).cloned().unwrap_or_else(BigRational::zero)))
            .collect();
        Ok(SlicePoint { coloring, params })
    }

    pub fn zero(coloring: &Coloring) -> Self {
        Self::from_fn(coloring, |_, _| BigRational::zero())
    }

    /// `t(i, j) = 1` exactly on the arcs of `cw`.
    pub fn arc_indicator(cw: &ConsistentInvolution) -> Self {
        let w = cw.involution();
        Self::from_fn(cw.coloring(), |i, j| {
            if w.image(i) == j {
                BigRational::one()
            } else {
                BigRational::zero()
            }
        })
    }

    /// Distinct primes 2, 3, 5, … assigned to the pairs in sorted order.
    pub fn generic(coloring: &Coloring) -> Self {
        let mut primes = primes();
        Self::from_fn(coloring, |_, _| integer(primes.next().unwrap()))
    }

    /// Parameters `p/q` with `p` in `[-3, 3]` and `q` in `[1, 3]`, so zeros
    /// (and hence degenerate orbits) occur with positive probability.
    pub fn random(coloring: &Coloring, seed: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        Self::from_fn(coloring, |_, _| {
            let p = rng.gen_range(-3..=3i64);
            let q = rng.gen_range(1..=3i64);
            BigRational::new(BigInt::from(p), BigInt::from(q))
        })
    }

    fn from_fn(coloring: &Coloring, mut f: impl FnMut(usize, usize) -> BigRational) -> Self {
        let params = coloring
            .black_white_pairs()
            .into_iter()
            .map(|(i, j)| ((i, j), f(i, j)))
            .collect();
        SlicePoint {
            coloring: coloring.clone(),
            params,
        }
    }

    pub fn coloring(&self) -> &Coloring {
        &self.coloring
    }

    pub fn params(&self) -> &BTreeMap<(usize, usize), BigRational> {
        &self.params
    }

    pub fn dimension(&self) -> usize {
        self.params.len()
    }
}

fn primes() -> impl Iterator<Item = i64> {
    (2i64..).filter(|&p| (2..).take_while(|d| d * d <= p).all(|d| p % d != 0))
}

/// The slice point as a pair of subspaces: `U(t)` is spanned by `e_i` for
/// Grey `i` with `s_i(λ) = 1` and by `e_j + Σ_{i<j Black} t(i,j) e_i` for each
/// White `j`; `W = U_μ`.
pub fn slice_subspaces(
    p: &SlicePoint,
    lambda: &Partition,
    mu: &Partition,
) -> Result<(Subspace, Subspace)> {
    let coloring = Coloring::from_partitions(lambda, mu)?;
    if &coloring != p.coloring() {
        return Err(input(format!(
            "slice point colored {} but {lambda}, {mu} give {coloring}",
            p.coloring()
        )));
    }
    let n = lambda.n();
    let s_lambda = lambda.bitstring();
    let mut gens = Vec::new();
    for i in 1..=n {
        match coloring.color(i) {
            Color::Grey if s_lambda.bit(i) => gens.push(unit_vector(n, i)),
            Color::White => {
                let mut v = unit_vector(n, i);
                for (&(b, wh), t) in p.params() {
                    if wh == i {
                        v[b - 1] = t.clone();
                    }
                }
                gens.push(v);
            }
            _ => {}
        }
    }
    let u = Subspace::spanned_by(n, &gens)?;
    let w = Subspace::coordinate(n, &mu.vertical_steps())?;
    Ok((u, w))
}

/// The embedding into square-zero matrices: entry `(i, j)` is `t(i, j)` on
/// Black–White pairs and zero elsewhere.
pub fn slice_embed(p: &SlicePoint) -> RationalMatrix {
    let n = p.coloring().n();
    let mut m = RationalMatrix::zeros(n, n);
    for (&(i, j), t) in p.params() {
        m.set(i, j, t.clone());
    }
    m
}

/// The embedded matrix with symbolic entries `t13`, `t16`, …, one row per
/// line, columns padded to equal width.
pub fn slice_matrix_symbolic(coloring: &Coloring) -> String {
    let n = coloring.n();
    let pairs = coloring.black_white_pairs();
    let sep = if n >= 10 { "_" } else { "" };
    let cell = |i: usize, j: usize| {
        if pairs.contains(&(i, j)) {
            format!("t{i}{sep}{j}")
        } else {
            "0".to_string()
        }
    };
    let width = (1..=n)
        .flat_map(|i| (1..=n).map(move |j| (i, j)))
        .map(|(i, j)| cell(i, j).len())
        .max()
        .unwrap_or(1);
    let mut out = String::new();
    for i in 1..=n {
        let row: Vec<String> = (1..=n).map(|j| format!("{:>width$}", cell(i, j))).collect();
        out.push_str(row.join(" ").trim_end());
        out.push('\n');
    }
    out
}

/// Generators of `U(t)` with symbolic parameters, e.g. `e6+t16*e1+t46*e4`.
pub fn slice_generators_symbolic(lambda: &Partition, mu: &Partition) -> Result<Vec<String>> {
    let coloring = Coloring::from_partitions(lambda, mu)?;
    let s_lambda = lambda.bitstring();
    let n = coloring.n();
    let sep = if n >= 10 { "_" } else { "" };
    let mut gens = Vec::new();
    for i in 1..=n {
        match coloring.color(i) {
            Color::Grey if s_lambda.bit(i) => gens.push(format!("e{i}")),
            Color::White => {
                let mut g = format!("e{i}");
                for b in coloring.blacks().into_iter().filter(|&b| b < i) {
                    g.push_str(&format!("+t{b}{sep}{i}*e{b}"));
                }
                gens.push(g);
            }
            _ => {}
        }
    }
    Ok(gens)
}
