//! Involutions of `{1..n}`, their arc diagrams, orbit dimensions and rank tables.
//!
//! An involution `w` (with `w² = Id`) labels the Borel orbit of the 0/1 matrix
//! `w_<` inside the strictly upper-triangular matrices with square zero. The
//! orbit closure order on these labels is decided by [`RankTable`]s, see
//! [`melnikov_leq`].
//!
//! All indices in this module's public interface are 1-based.

use std::fmt;

use crate::error::{input, Error, Result};
use crate::grassmann::Coloring;

/// Largest `n` accepted by [`enumerate_involutions`]. `|I_12| = 140152`.
pub const MAX_ENUMERATION_N: usize = 12;

/// A self-inverse permutation of `{1..n}`.
///
/// Ordering is lexicographic on the one-line notation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Involution {
    // 0-based images
    map: Vec<usize>,
}

impl Involution {
    pub fn identity(n: usize) -> Self {
        Involution {
            map: (0..n).collect(),
        }
    }

    /// Builds an involution from its one-line notation `w(1) w(2) ... w(n)`.
    pub fn from_one_line(images: &[usize]) -> Result<Self> {
        let n = images.len();
        if n == 0 {
            return Err(input("an involution needs n >= 1"));
        }
        let mut map = Vec::with_capacity(n);
        for (pos, &img) in images.iter().enumerate() {
            if img == 0 || img > n {
                return Err(input(format!(
                    "image {img} of {} is outside 1..{n}",
                    pos + 1
                )));
            }
            map.push(img - 1);
        }
        for (i, &j) in map.iter().enumerate() {
            if map[j] != i {
                return Err(input(format!(
                    "not an involution: w({}) = {} but w({}) = {}",
                    i + 1,
                    j + 1,
                    j + 1,
                    map[j] + 1
                )));
            }
        }
        Ok(Involution { map })
    }

    /// Builds an involution of size `n` from a list of arcs `(i, j)`.
    ///
    /// Arcs may be given in either orientation but must be pairwise disjoint
    /// and must not be loops.
    pub fn from_arcs(n: usize, arcs: &[(usize, usize)]) -> Result<Self> {
        if n == 0 {
            return Err(input("an involution needs n >= 1"));
        }
        let mut map: Vec<usize> = (0..n).collect();
        for &(a, b) in arcs {
            if a == 0 || b == 0 || a > n || b > n {
                return Err(input(format!("arc {a}-{b} is outside 1..{n}")));
            }
            if a == b {
                return Err(input(format!("arc {a}-{b} is a loop")));
            }
            let (a, b) = (a - 1, b - 1);
            if map[a] != a || map[b] != b {
                return Err(input(format!(
                    "arc {}-{} shares an endpoint with another arc",
                    a + 1,
                    b + 1
                )));
            }
            map[a] = b;
            map[b] = a;
        }
        Ok(Involution { map })
    }

    pub fn n(&self) -> usize {
        self.map.len()
    }

    /// `w(i)`, 1-based.
    pub fn image(&self, i: usize) -> usize {
        self.map[i - 1] + 1
    }

    pub fn one_line(&self) -> Vec<usize> {
        self.map.iter().map(|&j| j + 1).collect()
    }

    /// Arcs `(i, w(i))` with `i < w(i)`, sorted by left endpoint.
    pub fn arcs(&self) -> Vec<(usize, usize)> {
        self.map
            .iter()
            .enumerate()
            .filter(|&(i, &j)| i < j)
            .map(|(i, &j)| (i + 1, j + 1))
            .collect()
    }

    pub fn fixed_points(&self) -> Vec<usize> {
        self.map
            .iter()
            .enumerate()
            .filter(|&(i, &j)| i == j)
            .map(|(i, _)| i + 1)
            .collect()
    }

    pub fn is_fixed(&self, i: usize) -> bool {
        self.map[i - 1] == i - 1
    }

    pub fn arc_count(&self) -> usize {
        self.map.iter().enumerate().filter(|&(i, &j)| i < j).count()
    }

    pub fn is_identity(&self) -> bool {
        self.arc_count() == 0
    }

    /// Product-of-transpositions notation, e.g. `(17)(23)(58)`; `Id` for the
    /// identity. Indices are separated by a space once `n >= 10`.
    pub fn cycle_notation(&self) -> String {
        if self.is_identity() {
            return "Id".to_string();
        }
        let sep = if self.n() >= 10 { " " } else { "" };
        self.arcs()
            .iter()
            .map(|(i, j)| format!("({i}{sep}{j})"))
            .collect()
    }

    /// Arc-list notation accepted by the command line, e.g. `1-7,5-9`.
    pub fn arc_spec(&self) -> String {
        self.arcs()
            .iter()
            .map(|(i, j)| format!("{i}-{j}"))
            .collect::<Vec<_>>()
            .join(",")
    }

    pub(crate) fn map0(&self) -> &[usize] {
        &self.map
    }
}

impl fmt::Display for Involution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.cycle_notation())
    }
}

impl fmt::Debug for Involution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Involution[n={}; {}]", self.n(), self.cycle_notation())
    }
}

/// All involutions of `{1..n}`, sorted lexicographically by one-line notation.
pub fn enumerate_involutions(n: usize) -> Result<Vec<Involution>> {
    if n == 0 {
        return Err(input("n must be at least 1"));
    }
    if n > MAX_ENUMERATION_N {
        return Err(Error::Capacity {
            requested: n,
            limit: MAX_ENUMERATION_N,
        });
    }
    let mut out = Vec::new();
    let mut map: Vec<Option<usize>> = vec![None; n];
    extend_matchings(&mut map, &mut out);
    out.sort();
    Ok(out)
}

fn extend_matchings(map: &mut Vec<Option<usize>>, out: &mut Vec<Involution>) {
    let Some(first) = map.iter().position(Option::is_none) else {
        out.push(Involution {
            map: map.iter().map(|x| x.unwrap()).collect(),
        });
        return;
    };
    map[first] = Some(first);
    extend_matchings(map, out);
    for partner in first + 1..map.len() {
        if map[partner].is_none() {
            map[first] = Some(partner);
            map[partner] = Some(first);
            extend_matchings(map, out);
            map[partner] = None;
        }
    }
    map[first] = None;
}

/// Which fixed points of an arc diagram carry a vertical half-line.
#[derive(Debug, Clone, Copy)]
pub enum HalflinePolicy<'a> {
    /// Every fixed point (the square-zero matrix setting).
    AllFixed,
    /// Only Black and White fixed points of the given coloring; Grey ones
    /// carry nothing (the Grassmannian setting).
    ColoredOnly(&'a Coloring),
}

/// Arcs, fixed points and half-lines of an involution.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArcDiagram {
    pub n: usize,
    pub arcs: Vec<(usize, usize)>,
    pub fixed: Vec<usize>,
    pub halflines: Vec<usize>,
}

impl ArcDiagram {
    pub fn crossings(&self) -> usize {
        crossing_count(&self.arcs, &self.halflines)
    }
}

pub fn arc_diagram(w: &Involution, policy: HalflinePolicy<'_>) -> ArcDiagram {
    let fixed = w.fixed_points();
    let halflines = match policy {
        HalflinePolicy::AllFixed => fixed.clone(),
        HalflinePolicy::ColoredOnly(coloring) => fixed
            .iter()
            .copied()
            .filter(|&i| !coloring.color(i).is_grey())
            .collect(),
    };
    ArcDiagram {
        n: w.n(),
        arcs: w.arcs(),
        fixed,
        halflines,
    }
}

/// Number of crossings: pairs of arcs `(i,j), (k,l)` with `i < k < j < l`,
/// plus pairs (arc `(i,j)`, half-line at `k`) with `i < k < j`.
///
/// Two half-lines never cross here.
pub fn crossing_count(arcs: &[(usize, usize)], halflines: &[usize]) -> usize {
    let mut count = 0;
    for (a, &(i, j)) in arcs.iter().enumerate() {
        for &(k, l) in &arcs[a + 1..] {
            if (i < k && k < j && j < l) || (k < i && i < l && l < j) {
                count += 1;
            }
        }
        count += halflines.iter().filter(|&&h| i < h && h < j).count();
    }
    count
}

/// Dimension of the orbit `B · w_<`:
/// `#arcs · (#arcs + #half-lines) − #crossings`, every fixed point carrying a
/// half-line.
pub fn orbit_dimension(w: &Involution) -> usize {
    let d = arc_diagram(w, HalflinePolicy::AllFixed);
    let arcs = d.arcs.len();
    arcs * (arcs + d.halflines.len()) - d.crossings()
}

/// Upper-triangular table `r(i, j)`, `1 <= i < j <= n`, of arc counts or
/// submatrix ranks. Entries with `i >= j` read as zero.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RankTable {
    n: usize,
    r: Vec<u32>,
}

impl RankTable {
    pub fn zeros(n: usize) -> Self {
        RankTable {
            n,
            r: vec![0; n * n],
        }
    }

    /// Fills the table from `f(i, j)` for every `i < j`.
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> u32) -> Self {
        let mut t = RankTable::zeros(n);
        for i in 1..=n {
            for j in i + 1..=n {
                t.r[(i - 1) * n + (j - 1)] = f(i, j);
            }
        }
        t
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `r(i, j)`; zero when `i >= j` or either index is out of `1..=n`.
    pub fn get(&self, i: usize, j: usize) -> u32 {
        if i == 0 || j == 0 || i >= j || j > self.n {
            0
        } else {
            self.r[(i - 1) * self.n + (j - 1)]
        }
    }

    /// Inclusion-exclusion delta `r(i,j) − r(i+1,j) − r(i,j−1) + r(i+1,j−1)`.
    pub fn delta(&self, i: usize, j: usize) -> i64 {
        self.get(i, j) as i64 - self.get(i + 1, j) as i64 - self.get(i, j - 1) as i64
            + self.get(i + 1, j - 1) as i64
    }

    /// Entrywise `self <= other`.
    pub fn le(&self, other: &RankTable) -> Result<bool> {
        if self.n != other.n {
            return Err(Error::SizeMismatch {
                left: self.n,
                right: other.n,
            });
        }
        Ok(self.r.iter().zip(&other.r).all(|(a, b)| a <= b))
    }

    /// Checks the bound `r(i,j) <= floor((j−i+1)/2)`, monotonicity under
    /// interval inclusion and that every delta is 0 or 1.
    pub fn validate(&self) -> Result<()> {
        let n = self.n;
        for i in 1..=n {
            for j in i + 1..=n {
                let v = self.get(i, j);
                if v as usize > (j - i).div_ceil(2) {
                    return Err(Error::Reconstruction(format!(
                        "r({i},{j}) = {v} exceeds floor(({j}-{i}+1)/2)"
                    )));
                }
                if self.get(i + 1, j) > v || self.get(i, j - 1) > v {
                    return Err(Error::Reconstruction(format!(
                        "r is not monotone at ({i},{j})"
                    )));
                }
                let d = self.delta(i, j);
                if d != 0 && d != 1 {
                    return Err(Error::Reconstruction(format!(
                        "delta at ({i},{j}) is {d}, expected 0 or 1"
                    )));
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for RankTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "RankTable(n={})", self.n)?;
        for i in 1..=self.n {
            let row: Vec<String> = (1..=self.n)
                .map(|j| {
                    if j > i {
                        self.get(i, j).to_string()
                    } else {
                        ".".to_string()
                    }
                })
                .collect();
            writeln!(f, "  {}", row.join(" "))?;
        }
        Ok(())
    }
}

/// `r(i, j)` = number of arcs `(i', j')` of `w` with `i <= i' < j' <= j`.
pub fn rank_table(w: &Involution) -> RankTable {
    let n = w.n();
    let mut t = RankTable::zeros(n);
    // r(i,j) = r(i+1,j) + r(i,j-1) - r(i+1,j-1) + [w(i) = j]
    for len in 1..n {
        for i in 1..=n - len {
            let j = i + len;
            let arc = u32::from(w.image(i) == j);
            let v = t.get(i + 1, j) + t.get(i, j - 1) - t.get(i + 1, j - 1) + arc;
            t.r[(i - 1) * n + (j - 1)] = v;
        }
    }
    t
}

/// Orbit closure order on involutions: `v <= w` iff `rank_table(v) <=
/// rank_table(w)` entrywise.
pub fn melnikov_leq(v: &Involution, w: &Involution) -> Result<bool> {
    if v.n() != w.n() {
        return Err(Error::SizeMismatch {
            left: v.n(),
            right: w.n(),
        });
    }
    rank_table(v).le(&rank_table(w))
}

/// Recovers the involution whose rank table is `r`.
///
/// An arc `(i, j)` is present exactly where the inclusion-exclusion delta is 1.
pub fn involution_from_rank_table(r: &RankTable) -> Result<Involution> {
    let n = r.n();
    if n == 0 {
        return Err(Error::Reconstruction("empty table".into()));
    }
    let mut arcs = Vec::new();
    let mut used = vec![false; n + 1];
    for i in 1..=n {
        for j in i + 1..=n {
            match r.delta(i, j) {
                0 => {}
                1 => {
                    if used[i] || used[j] {
                        return Err(Error::Reconstruction(format!(
                            "index {} lies on two arcs",
                            if used[i] { i } else { j }
                        )));
                    }
                    used[i] = true;
                    used[j] = true;
                    arcs.push((i, j));
                }
                d => {
                    return Err(Error::Reconstruction(format!(
                        "delta at ({i},{j}) is {d}"
                    )))
                }
            }
        }
    }
    let w = Involution::from_arcs(n, &arcs).map_err(|e| Error::Reconstruction(e.to_string()))?;
    if &rank_table(&w) != r {
        return Err(Error::Reconstruction(
            "rebuilt involution does not reproduce the table".into(),
        ));
    }
    Ok(w)
}
