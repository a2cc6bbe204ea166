//! Exhaustive and randomized verification suites.
//!
//! Each suite returns a [`CheckReport`] listing what it looked at and, on
//! failure, the first witness found. Randomized suites derive one seed per
//! trial from a master seed, so every run is reproducible.

use std::fmt;

use crate::error::{Error, Result};
use crate::export::{grassmannian_poset, nilpotent_poset};
use crate::grassmann::{
    all_partition_pairs, codimension_d, covering_comparison, enumerate_consistent,
    max_orbit_involution, min_orbit_involution, restricted_leq, verify_restriction_theorem,
    BrokenCover, Coloring, ConsistentInvolution, Partition, MAX_VERIFY_N,
};
use crate::involution::{enumerate_involutions, orbit_dimension, rank_table};
use crate::realize::{
    canonical_pair, conjugate, identify_orbit, is_square_zero, random_borel, schubert_profile,
    slice_embed, slice_subspaces, southwest_rank_table, strict_upper_from_involution, SlicePoint,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Check {
    MainTheorem,
    RankOracle,
    Slice,
    Covers,
    OrderAxioms,
}

impl Check {
    pub fn name(self) -> &'static str {
        match self {
            Check::MainTheorem => "main-theorem",
            Check::RankOracle => "rank-oracle",
            Check::Slice => "slice",
            Check::Covers => "covers",
            Check::OrderAxioms => "order-axioms",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckReport {
    pub check: Check,
    pub lines: Vec<String>,
    pub failure: Option<String>,
}

impl CheckReport {
    fn new(check: Check) -> Self {
        CheckReport {
            check,
            lines: Vec::new(),
            failure: None,
        }
    }

    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }

    fn fail(mut self, witness: String) -> Self {
        self.failure = Some(witness);
        self
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for line in &self.lines {
            writeln!(f, "{line}")?;
        }
        match &self.failure {
            None => writeln!(f, "{}: PASS", self.check.name()),
            Some(w) => writeln!(f, "{}: FAIL\ncounterexample: {w}", self.check.name()),
        }
    }
}

/// Derives the seed of trial `index` from `master` (splitmix64 step).
pub fn trial_seed(master: u64, index: u64) -> u64 {
    let mut z = master.wrapping_add(index.wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15));
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

fn check_capacity(max_n: usize) -> Result<()> {
    if max_n == 0 {
        return Err(Error::Input("max-n must be at least 1".into()));
    }
    if max_n > MAX_VERIFY_N {
        return Err(Error::Capacity {
            requested: max_n,
            limit: MAX_VERIFY_N,
        });
    }
    Ok(())
}

pub fn run(check: Check, max_n: usize, seed: u64, trials: usize) -> Result<CheckReport> {
    match check {
        Check::MainTheorem => main_theorem(max_n),
        Check::RankOracle => rank_oracle(max_n, seed, trials),
        Check::Slice => slice(max_n, seed, trials),
        Check::Covers => covers(max_n),
        Check::OrderAxioms => order_axioms(max_n),
    }
}

/// Restricted order equals the closure order of `I_n` on every `I_n(λ, μ)`.
pub fn main_theorem(max_n: usize) -> Result<CheckReport> {
    check_capacity(max_n)?;
    let mut report = CheckReport::new(Check::MainTheorem);
    let r = verify_restriction_theorem(max_n)?;
    report.lines.push(format!(
        "n <= {max_n}: {} (lambda, mu) cells, {} ordered pairs compared",
        r.cells, r.pairs
    ));
    Ok(match r.counterexample {
        None => report,
        Some(c) => report.fail(format!(
            "lambda={} mu={} v={} w={} restricted={} melnikov={}",
            c.lambda, c.mu, c.v, c.w, c.restricted, c.melnikov
        )),
    })
}

/// Southwestern ranks of `w_<` are the arc counts of `w`, and they survive
/// `trials` random conjugations by upper-triangular matrices.
pub fn rank_oracle(max_n: usize, seed: u64, trials: usize) -> Result<CheckReport> {
    check_capacity(max_n)?;
    let mut report = CheckReport::new(Check::RankOracle);
    let mut counter = 0u64;
    for n in 1..=max_n {
        let all = enumerate_involutions(n)?;
        for w in &all {
            let x = strict_upper_from_involution(w);
            if !is_square_zero(&x)? {
                return Ok(report.fail(format!("w_< of {w} does not square to zero")));
            }
            let table = rank_table(w);
            if southwest_rank_table(&x)? != table {
                return Ok(report.fail(format!("southwest ranks of w_< differ from arc counts for {w}")));
            }
            for _ in 0..trials {
                let s = trial_seed(seed, counter);
                counter += 1;
                let b = random_borel(n, s);
                let y = conjugate(&b, &x)?;
                if southwest_rank_table(&y)? != table {
                    return Ok(report.fail(format!(
                        "conjugating w_< of {w} by random_borel({n}, {s}) changes the rank table"
                    )));
                }
                if identify_orbit(&y)? != *w {
                    return Ok(report.fail(format!("conjugate of w_< for {w} identified elsewhere (seed {s})")));
                }
            }
        }
        report.lines.push(format!(
            "n = {n}: {} orbits, {} conjugations each",
            all.len(),
            trials
        ));
    }
    Ok(report)
}

/// Slice checks for one `(λ, μ)`. Returns a witness on failure.
pub fn slice_cell(
    lambda: &Partition,
    mu: &Partition,
    seed: u64,
    trials: usize,
) -> Result<Option<String>> {
    let coloring = Coloring::from_partitions(lambda, mu)?;
    let elems = enumerate_consistent(lambda, mu)?;
    let top = max_orbit_involution(&coloring);
    let id = min_orbit_involution(&coloring);
    let tag = format!("lambda={lambda} mu={mu}");

    let zero = SlicePoint::zero(&coloring);
    if zero.dimension() != codimension_d(&id) {
        return Ok(Some(format!(
            "{tag}: slice has {} parameters but d(Id) = {}",
            zero.dimension(),
            codimension_d(&id)
        )));
    }
    for cw in &elems {
        let p = SlicePoint::arc_indicator(cw);
        let x = slice_embed(&p);
        if x != strict_upper_from_involution(cw.involution()) {
            return Ok(Some(format!("{tag}: arc-indicator point of {cw} does not embed to w_<")));
        }
        if identify_orbit(&x)? != *cw.involution() {
            return Ok(Some(format!("{tag}: arc-indicator point of {cw} identified elsewhere")));
        }
        let (u, w) = slice_subspaces(&p, lambda, mu)?;
        let (cu, cwsp) = canonical_pair(cw, lambda, mu)?;
        if !u.same_as(&cu) || !w.same_as(&cwsp) {
            return Ok(Some(format!("{tag}: arc-indicator point of {cw} is not the canonical pair")));
        }
    }
    let generic = SlicePoint::generic(&coloring);
    let found = identify_orbit(&slice_embed(&generic))?;
    if &found != top.involution() {
        return Ok(Some(format!(
            "{tag}: generic point lies in the orbit of {found}, expected {}",
            top.involution()
        )));
    }
    // a zero-dimensional slice is a single point
    let trials = if zero.dimension() == 0 { trials.min(1) } else { trials };
    for t in 0..trials {
        let s = trial_seed(seed, t as u64);
        let p = SlicePoint::random(&coloring, s);
        let found = identify_orbit(&slice_embed(&p))?;
        let Ok(cw) = ConsistentInvolution::new(found.clone(), coloring.clone()) else {
            return Ok(Some(format!("{tag}: random point (seed {s}) identified as inconsistent {found}")));
        };
        if !restricted_leq(&cw, &top)? {
            return Ok(Some(format!("{tag}: random point (seed {s}) lies above the open orbit")));
        }
        let (u, w) = slice_subspaces(&p, lambda, mu)?;
        if schubert_profile(&u)? != *lambda || schubert_profile(&w)? != *mu {
            return Ok(Some(format!("{tag}: random point (seed {s}) leaves the Schubert cells")));
        }
        let (cu, cwsp) = canonical_pair(&cw, lambda, mu)?;
        if u.flag_profile() != cu.flag_profile() || w.flag_profile() != cwsp.flag_profile() {
            return Ok(Some(format!(
                "{tag}: random point (seed {s}) and the canonical pair of {found} have different flag profiles"
            )));
        }
    }
    Ok(None)
}

pub fn slice(max_n: usize, seed: u64, trials: usize) -> Result<CheckReport> {
    check_capacity(max_n)?;
    let mut report = CheckReport::new(Check::Slice);
    for n in 1..=max_n {
        let pairs = all_partition_pairs(n)?;
        for (idx, (lambda, mu)) in pairs.iter().enumerate() {
            let cell_seed = trial_seed(seed, ((n as u64) << 32) | idx as u64);
            if let Some(w) = slice_cell(lambda, mu, cell_seed, trials)? {
                return Ok(report.fail(w));
            }
        }
        report.lines.push(format!(
            "n = {n}: {} (lambda, mu) cells, {trials} random slice points each",
            pairs.len()
        ));
    }
    Ok(report)
}

fn format_broken(lambda: &Partition, mu: &Partition, b: &BrokenCover) -> String {
    let mids: Vec<String> = b.intermediates.iter().map(ToString::to_string).collect();
    format!(
        "n={} lambda={lambda} mu={mu}: ({}, {}) is a cover in I_n(lambda,mu) but not in I_n; intermediate {}",
        lambda.n(),
        b.lower,
        b.upper,
        mids.join(" ")
    )
}

/// Lists covers of the restricted posets that are not covers of `I_n`. Fails
/// if an intermediate element turns out to be consistent with `(λ, μ)`.
pub fn covers(max_n: usize) -> Result<CheckReport> {
    check_capacity(max_n)?;
    let mut report = CheckReport::new(Check::Covers);
    let mut total = 0;
    for n in 1..=max_n {
        for (lambda, mu) in all_partition_pairs(n)? {
            let coloring = Coloring::from_partitions(&lambda, &mu)?;
            for b in covering_comparison(&lambda, &mu)? {
                if let Some(x) = b
                    .intermediates
                    .iter()
                    .find(|x| ConsistentInvolution::new((*x).clone(), coloring.clone()).is_ok())
                {
                    return Ok(report.fail(format!(
                        "lambda={lambda} mu={mu}: {x} is consistent yet lies strictly between the restricted cover ({}, {})",
                        b.lower, b.upper
                    )));
                }
                report.lines.push(format_broken(&lambda, &mu, &b));
                total += 1;
            }
        }
    }
    report
        .lines
        .push(format!("{total} broken covers for n <= {max_n}"));
    Ok(report)
}

/// Partial-order axioms for every order the library builds, plus the
/// monotonicity of dimension and codimension along them and the unique
/// extremal orbits of each product of cells.
pub fn order_axioms(max_n: usize) -> Result<CheckReport> {
    check_capacity(max_n)?;
    let mut report = CheckReport::new(Check::OrderAxioms);
    for n in 1..=max_n {
        let poset = match nilpotent_poset(n) {
            Ok(p) => p,
            Err(e) => return Ok(report.fail(format!("I_{n}: {e}"))),
        };
        for a in 0..poset.len() {
            for b in 0..poset.len() {
                if poset.lt(a, b)
                    && orbit_dimension(poset.element(a)) >= orbit_dimension(poset.element(b))
                {
                    return Ok(report.fail(format!(
                        "{} < {} but the dimension does not increase",
                        poset.element(a),
                        poset.element(b)
                    )));
                }
            }
        }
        let mut cells = 0;
        for (lambda, mu) in all_partition_pairs(n)? {
            cells += 1;
            let p = match grassmannian_poset(&lambda, &mu) {
                Ok(p) => p,
                Err(e) => return Ok(report.fail(format!("lambda={lambda} mu={mu}: {e}"))),
            };
            let coloring = Coloring::from_partitions(&lambda, &mu)?;
            let top = p.position(&max_orbit_involution(&coloring));
            let bottom = p.position(&min_orbit_involution(&coloring));
            if top.map(|t| vec![t]) != Some(p.maximal()) || bottom.map(|b| vec![b]) != Some(p.minimal()) {
                return Ok(report.fail(format!(
                    "lambda={lambda} mu={mu}: extremal elements are not the expected unique max/min"
                )));
            }
            for (a, x) in p.elements().iter().enumerate() {
                let d = codimension_d(x);
                if (Some(a) == top) != (d == 0) {
                    return Ok(report.fail(format!(
                        "lambda={lambda} mu={mu}: d({x}) = {d}"
                    )));
                }
                if d > lambda.size() + mu.size() {
                    return Ok(report.fail(format!(
                        "lambda={lambda} mu={mu}: d({x}) = {d} exceeds |lambda|+|mu|"
                    )));
                }
                for b in 0..p.len() {
                    if p.lt(a, b) && d <= codimension_d(p.element(b)) {
                        return Ok(report.fail(format!(
                            "lambda={lambda} mu={mu}: {x} < {} but the codimension does not drop",
                            p.element(b)
                        )));
                    }
                }
            }
        }
        report.lines.push(format!(
            "n = {n}: I_n with {} elements and {cells} restricted posets are partial orders",
            poset.len()
        ));
    }
    Ok(report)
}
