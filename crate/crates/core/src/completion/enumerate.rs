//! Finite candidate sets for the optimal added spectrum.
//!
//! A candidate is described by a tail `λ_r, …, λ_d` of the decreasing
//! spectrum, a partition of that tail into blocks `K_1, …, K_p`, a partition
//! of the (decreasing) norms into blocks `J_1, …, J_p`, and a pairing. Each
//! block pair lifts its λ entries to the common level
//! `c_i = (Σ_{K_i} λ + Σ_{J_i} b) / |K_i|`, giving `Γ_i = (c_i - λ_j)_{j∈K_i}`.
//! The pair is admissible when `Γ_i ≥ 0` and `b_{J_i} ≺ Γ_i`; the assembled
//! vector `μ` (zero before the tail) must be increasing.

use std::collections::HashMap;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::spectrum::{scale_of, NormSeq, Order, Spectrum};

/// Slack for `Γ ≥ 0`, prefix inequalities and monotonicity, relative to the
/// problem scale.
const ACCEPT_TOL: f64 = 1e-10;
/// Margin a provenance must clear on every inequality to count as strict.
const STRICT_TOL: f64 = 1e-9;
/// Resolution of the deduplication key.
const DEDUP_RESOLUTION: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum EnumerationMode {
    /// Every set partition of the tail and of the norms, with every pairing.
    Full,
    /// Consecutive blocks paired in opposite order only.
    Consecutive,
}

impl FromStr for EnumerationMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "full" => Ok(Self::Full),
            "consecutive" => Ok(Self::Consecutive),
            other => Err(Error::InvalidInput(format!(
                "unknown mode {other:?}, expected full or consecutive"
            ))),
        }
    }
}

/// Bounds on the work an enumeration may perform.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Caps {
    /// Partition pairs (or consecutive structures) examined per call.
    pub max_partition_pairs: u64,
}

impl Default for Caps {
    fn default() -> Self {
        Self {
            max_partition_pairs: 10_000_000,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CandidateBlock {
    /// 0-based positions into the decreasing λ.
    pub lambda_indices: Vec<usize>,
    /// 0-based positions into the decreasing norms.
    pub norm_indices: Vec<usize>,
    pub level: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CandidateMu {
    /// Increasing, aligned with the decreasing λ.
    pub mu: Spectrum,
    /// 0-based start of the raised tail; `μ_j = 0` for `j < r`.
    pub r: usize,
    /// One provenance of this vector.
    pub blocks: Vec<CandidateBlock>,
    /// Some provenance satisfies every inequality with margin.
    pub strict: bool,
}

impl CandidateMu {
    /// `λ + μ` in the positions of λ.
    pub fn nu_aligned(&self, lambda: &Spectrum) -> Vec<f64> {
        lambda
            .values()
            .iter()
            .zip(self.mu.values())
            .map(|(l, m)| l + m)
            .collect()
    }

    pub fn nu(&self, lambda: &Spectrum) -> Spectrum {
        Spectrum::sorted(self.nu_aligned(lambda), Order::Decreasing).expect("sum of nonnegative spectra")
    }
}

/// A unit of parallel work: tail start `r` (0-based) and block count `p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct WorkItem {
    pub r: usize,
    pub p: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct EnumerationStats {
    pub pairs_explored: u64,
    /// Accepted (partition, partition, pairing) triples.
    pub provenances: usize,
    /// Accepted triples whose inequalities all hold with margin.
    pub strict_provenances: usize,
    /// Distinct candidate vectors.
    pub distinct: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Enumeration {
    pub mode: EnumerationMode,
    /// Sorted lexicographically by μ.
    pub candidates: Vec<CandidateMu>,
    pub stats: EnumerationStats,
}

/// State of an enumeration stopped by its caps; pass it to [`resume_efin`].
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EnumerationProgress {
    pub mode: EnumerationMode,
    pub cap: u64,
    pub pairs_explored: u64,
    pub completed_items: Vec<WorkItem>,
    pub remaining_items: Vec<WorkItem>,
    /// Work the smallest remaining item needs on its own.
    pub next_item_cost: u64,
    pub partial: Enumeration,
}

/// Enumerates the candidate set.
///
/// Fails with [`Error::CapsExceeded`] once the planned work would exceed
/// `caps`; the error carries everything found so far.
pub fn enumerate_efin(lambda: &Spectrum, b: &NormSeq, mode: EnumerationMode, caps: Caps) -> Result<Enumeration> {
    let problem = Problem::new(lambda, b)?;
    let items = problem.work_items(mode);
    run(&problem, mode, caps, items, Vec::new(), Vec::new(), 0)
}

/// Continues a capped enumeration with a fresh budget.
pub fn resume_efin(lambda: &Spectrum, b: &NormSeq, caps: Caps, progress: EnumerationProgress) -> Result<Enumeration> {
    let problem = Problem::new(lambda, b)?;
    let provs = progress
        .partial
        .candidates
        .into_iter()
        .map(Provenance::from_candidate)
        .collect();
    let prior = progress.partial.stats;
    run(
        &problem,
        progress.mode,
        caps,
        progress.remaining_items,
        progress.completed_items,
        provs,
        progress.pairs_explored,
    )
    .map(|mut e| {
        e.stats.provenances += prior.provenances;
        e.stats.strict_provenances += prior.strict_provenances;
        e
    })
    .map_err(|err| match err {
        Error::CapsExceeded(mut p) => {
            p.partial.stats.provenances += prior.provenances;
            p.partial.stats.strict_provenances += prior.strict_provenances;
            Error::CapsExceeded(p)
        }
        other => other,
    })
}

fn run(
    problem: &Problem,
    mode: EnumerationMode,
    caps: Caps,
    items: Vec<WorkItem>,
    mut completed: Vec<WorkItem>,
    carried: Vec<Provenance>,
    explored_before: u64,
) -> Result<Enumeration> {
    let mut budget = caps.max_partition_pairs;
    let mut planned = Vec::new();
    let mut remaining = Vec::new();
    for item in items {
        let cost = problem.cost(mode, item);
        if remaining.is_empty() && cost <= budget {
            budget -= cost;
            planned.push(item);
        } else {
            remaining.push(item);
        }
    }

    let batches: Vec<(u64, Vec<Provenance>)> = planned
        .par_iter()
        .map(|&item| match mode {
            EnumerationMode::Full => problem.full_item(item),
            EnumerationMode::Consecutive => problem.consecutive_item(item),
        })
        .collect();

    let mut explored = explored_before;
    let mut stats = EnumerationStats::default();
    let mut merged = Merger::new(problem.scale);
    for prov in carried {
        merged.push(prov);
    }
    for (pairs, batch) in batches {
        explored += pairs;
        for prov in batch {
            stats.provenances += 1;
            stats.strict_provenances += usize::from(prov.strict);
            merged.push(prov);
        }
    }
    completed.extend(planned);
    completed.sort();
    stats.pairs_explored = explored;
    let candidates = merged.finish();
    stats.distinct = candidates.len();
    let enumeration = Enumeration {
        mode,
        candidates,
        stats,
    };

    if remaining.is_empty() {
        return Ok(enumeration);
    }
    let next_item_cost = remaining.iter().map(|&it| problem.cost(mode, it)).min().unwrap_or(0);
    Err(Error::CapsExceeded(Box::new(EnumerationProgress {
        mode,
        cap: caps.max_partition_pairs,
        pairs_explored: explored,
        completed_items: completed,
        remaining_items: remaining,
        next_item_cost,
        partial: enumeration,
    })))
}

struct Problem {
    lambda: Vec<f64>,
    b: Vec<f64>,
    scale: f64,
}

#[derive(Clone, Debug)]
struct Provenance {
    mu: Vec<f64>,
    r: usize,
    blocks: Vec<CandidateBlock>,
    strict: bool,
}

impl Provenance {
    fn from_candidate(c: CandidateMu) -> Self {
        Self {
            mu: c.mu.into_values(),
            r: c.r,
            blocks: c.blocks,
            strict: c.strict,
        }
    }
}

/// Outcome of testing one (K, J) block pair.
#[derive(Clone, Copy)]
struct BlockFit {
    level: f64,
    strict: bool,
}

impl Problem {
    fn new(lambda: &Spectrum, b: &NormSeq) -> Result<Self> {
        if lambda.order() != Order::Decreasing {
            return Err(Error::InvalidInput("λ must be decreasing".into()));
        }
        let lambda = lambda.values().to_vec();
        let b = b.values().to_vec();
        let scale = scale_of(&lambda).max(scale_of(&b));
        Ok(Self { lambda, b, scale })
    }

    fn d(&self) -> usize {
        self.lambda.len()
    }

    fn k(&self) -> usize {
        self.b.len()
    }

    fn work_items(&self, mode: EnumerationMode) -> Vec<WorkItem> {
        let (d, k) = (self.d(), self.k());
        let mut items = Vec::new();
        match mode {
            EnumerationMode::Full => {
                for r in 0..d {
                    for p in 1..=(d - r).min(k) {
                        items.push(WorkItem { r, p });
                    }
                }
            }
            EnumerationMode::Consecutive => {
                // the tail may not be longer than the number of norms
                for r in d.saturating_sub(k)..d {
                    for p in 1..=(d - r) {
                        items.push(WorkItem { r, p });
                    }
                }
            }
        }
        items
    }

    fn cost(&self, mode: EnumerationMode, item: WorkItem) -> u64 {
        let l = self.d() - item.r;
        match mode {
            EnumerationMode::Full => stirling2(l, item.p).saturating_mul(stirling2(self.k(), item.p)),
            EnumerationMode::Consecutive => binomial(l - 1, item.p - 1),
        }
    }

    /// Tests the block pair `(K, J)`; `kk` ascending positions into λ and
    /// `jj` ascending positions into b.
    fn fit(&self, kk: &[usize], jj: &[usize]) -> Option<BlockFit> {
        let accept = ACCEPT_TOL * self.scale;
        let strict_margin = STRICT_TOL * self.scale;
        let sum_l: f64 = kk.iter().map(|&i| self.lambda[i]).sum();
        let sum_b: f64 = jj.iter().map(|&j| self.b[j]).sum();
        let level = (sum_l + sum_b) / kk.len() as f64;
        // Γ decreasing is λ over K reversed, so the smallest entry is the last
        let gamma_min = level - self.lambda[kk[0]];
        if gamma_min < -accept {
            return None;
        }
        let mut strict = gamma_min > strict_margin;
        // b_J is decreasing already; Γ decreasing walks K from its end
        let n = kk.len().max(jj.len());
        let (mut sb, mut sg) = (0.0, 0.0);
        for t in 0..n.saturating_sub(1) {
            sb += jj.get(t).map_or(0.0, |&j| self.b[j]);
            sg += if t < kk.len() {
                level - self.lambda[kk[kk.len() - 1 - t]]
            } else {
                0.0
            };
            let slack = sg - sb;
            if slack < -accept {
                return None;
            }
            strict &= slack > strict_margin;
        }
        Some(BlockFit { level, strict })
    }

    /// Assembles μ from matched blocks and checks monotonicity.
    fn assemble(
        &self,
        r: usize,
        k_blocks: &[Vec<usize>],
        j_blocks: &[&Vec<usize>],
        fits: &[BlockFit],
    ) -> Option<Provenance> {
        let d = self.d();
        let mut mu = vec![0.0; d];
        for (kk, fit) in k_blocks.iter().zip(fits) {
            for &i in kk {
                mu[i] = (fit.level - self.lambda[i]).max(0.0);
            }
        }
        let tol = ACCEPT_TOL * self.scale;
        if mu.windows(2).any(|w| w[0] > w[1] + tol) {
            return None;
        }
        let blocks = k_blocks
            .iter()
            .zip(j_blocks)
            .zip(fits)
            .map(|((kk, jj), fit)| CandidateBlock {
                lambda_indices: kk.clone(),
                norm_indices: (*jj).clone(),
                level: fit.level,
            })
            .collect();
        Some(Provenance {
            mu,
            r,
            blocks,
            strict: fits.iter().all(|f| f.strict),
        })
    }

    fn full_item(&self, item: WorkItem) -> (u64, Vec<Provenance>) {
        let WorkItem { r, p } = item;
        let tail: Vec<usize> = (r..self.d()).collect();
        let norms: Vec<usize> = (0..self.k()).collect();
        let k_parts = set_partitions(&tail, p);
        let j_parts = set_partitions(&norms, p);
        let mut out = Vec::new();
        let mut pairs = 0u64;
        let mut compat: Vec<Option<BlockFit>> = vec![None; p * p];
        let mut chosen: Vec<usize> = Vec::with_capacity(p);
        let mut used = vec![false; p];
        for kp in &k_parts {
            for jp in &j_parts {
                pairs += 1;
                let mut any_row_empty = false;
                for (a, kk) in kp.iter().enumerate() {
                    let mut row_ok = false;
                    for (c, jj) in jp.iter().enumerate() {
                        let f = self.fit(kk, jj);
                        row_ok |= f.is_some();
                        compat[a * p + c] = f;
                    }
                    if !row_ok {
                        any_row_empty = true;
                        break;
                    }
                }
                if any_row_empty {
                    continue;
                }
                chosen.clear();
                used.iter_mut().for_each(|u| *u = false);
                self.match_blocks(r, kp, jp, &compat, &mut chosen, &mut used, &mut out);
            }
        }
        (pairs, out)
    }

    /// Backtracks over bijections K-block -> J-block allowed by `compat`.
    #[allow(clippy::too_many_arguments)]
    fn match_blocks(
        &self,
        r: usize,
        kp: &[Vec<usize>],
        jp: &[Vec<usize>],
        compat: &[Option<BlockFit>],
        chosen: &mut Vec<usize>,
        used: &mut [bool],
        out: &mut Vec<Provenance>,
    ) {
        let p = kp.len();
        let a = chosen.len();
        if a == p {
            let j_blocks: Vec<&Vec<usize>> = chosen.iter().map(|&c| &jp[c]).collect();
            let fits: Vec<BlockFit> = chosen
                .iter()
                .enumerate()
                .map(|(a, &c)| compat[a * p + c].expect("checked"))
                .collect();
            if let Some(prov) = self.assemble(r, kp, &j_blocks, &fits) {
                out.push(prov);
            }
            return;
        }
        for c in 0..p {
            if used[c] || compat[a * p + c].is_none() {
                continue;
            }
            used[c] = true;
            chosen.push(c);
            self.match_blocks(r, kp, jp, compat, chosen, used, out);
            chosen.pop();
            used[c] = false;
        }
    }

    /// All splits `r ≤ r_1 < … < r_{p-1} < d` (0-based ends, inclusive) of
    /// the tail into consecutive blocks; the first λ block meets the last
    /// norms and later λ blocks meet progressively larger norms.
    fn consecutive_item(&self, item: WorkItem) -> (u64, Vec<Provenance>) {
        let WorkItem { r, p } = item;
        let (d, k) = (self.d(), self.k());
        let mut out = Vec::new();
        let mut pairs = 0u64;
        // inner cut points chosen among r..d-1 (block ends, exclusive of d-1)
        let inner: Vec<usize> = (r..d - 1).collect();
        for cuts in combinations(&inner, p - 1) {
            pairs += 1;
            let mut ends = cuts.clone();
            ends.push(d - 1);
            let mut k_blocks = Vec::with_capacity(p);
            let mut j_blocks = Vec::with_capacity(p);
            let mut start = r;
            for (idx, &end) in ends.iter().enumerate() {
                k_blocks.push((start..=end).collect::<Vec<usize>>());
                // norms matched to λ_{start..=end}: positions d-1-end .. the
                // previous boundary; the first block absorbs the remainder
                let j_lo = d - 1 - end;
                let j_hi = if idx == 0 { k } else { d - start };
                j_blocks.push((j_lo..j_hi).collect::<Vec<usize>>());
                start = end + 1;
            }
            let mut fits = Vec::with_capacity(p);
            for (kk, jj) in k_blocks.iter().zip(&j_blocks) {
                match self.fit(kk, jj) {
                    Some(f) => fits.push(f),
                    None => break,
                }
            }
            if fits.len() < p {
                continue;
            }
            let j_refs: Vec<&Vec<usize>> = j_blocks.iter().collect();
            if let Some(prov) = self.assemble(r, &k_blocks, &j_refs, &fits) {
                out.push(prov);
            }
        }
        (pairs, out)
    }
}

/// Deduplicates provenances by their rounded μ.
struct Merger {
    index: HashMap<Vec<i64>, usize>,
    kept: Vec<Provenance>,
    resolution: f64,
}

impl Merger {
    fn new(scale: f64) -> Self {
        Self {
            index: HashMap::new(),
            kept: Vec::new(),
            resolution: DEDUP_RESOLUTION * scale.max(1.0),
        }
    }

    fn push(&mut self, prov: Provenance) {
        let key: Vec<i64> = prov.mu.iter().map(|x| (x / self.resolution).round() as i64).collect();
        match self.index.get(&key) {
            Some(&slot) => {
                if prov.strict && !self.kept[slot].strict {
                    self.kept[slot] = prov;
                }
            }
            None => {
                self.index.insert(key, self.kept.len());
                self.kept.push(prov);
            }
        }
    }

    fn finish(self) -> Vec<CandidateMu> {
        let mut kept = self.kept;
        kept.sort_by(|a, b| {
            a.mu.iter()
                .zip(&b.mu)
                .map(|(x, y)| x.total_cmp(y))
                .find(|o| o.is_ne())
                .unwrap_or(std::cmp::Ordering::Equal)
        });
        kept.into_iter()
            .map(|p| CandidateMu {
                mu: Spectrum::sorted(p.mu, Order::Increasing).expect("monotone by construction"),
                r: p.r,
                blocks: p.blocks,
                strict: p.strict,
            })
            .collect()
    }
}

/// Partitions of `items` into exactly `p` nonempty blocks, each block
/// ascending and blocks ordered by their first element.
pub(crate) fn set_partitions(items: &[usize], p: usize) -> Vec<Vec<Vec<usize>>> {
    let n = items.len();
    let mut out = Vec::new();
    if p == 0 || p > n {
        return out;
    }
    // restricted growth strings: a[0] = 0, a[i] ≤ 1 + max(a[..i])
    let mut a = vec![0usize; n];
    fn rec(i: usize, used: usize, a: &mut Vec<usize>, items: &[usize], p: usize, out: &mut Vec<Vec<Vec<usize>>>) {
        let n = items.len();
        if used + (n - i) < p {
            return;
        }
        if i == n {
            if used == p {
                let mut blocks = vec![Vec::new(); p];
                for (t, &lab) in a.iter().enumerate() {
                    blocks[lab].push(items[t]);
                }
                out.push(blocks);
            }
            return;
        }
        for lab in 0..used.min(p) {
            a[i] = lab;
            rec(i + 1, used, a, items, p, out);
        }
        if used < p {
            a[i] = used;
            rec(i + 1, used + 1, a, items, p, out);
        }
    }
    rec(1, 1, &mut a, items, p, &mut out);
    out
}

fn combinations(items: &[usize], m: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(m);
    fn rec(start: usize, items: &[usize], m: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == m {
            out.push(cur.clone());
            return;
        }
        for i in start..items.len() {
            if items.len() - i < m - cur.len() {
                break;
            }
            cur.push(items[i]);
            rec(i + 1, items, m, cur, out);
            cur.pop();
        }
    }
    rec(0, items, m, &mut cur, &mut out);
    out
}

/// Stirling numbers of the second kind, saturating.
pub(crate) fn stirling2(n: usize, p: usize) -> u64 {
    let mut row = vec![0u64; p + 1];
    row[0] = 1;
    for i in 1..=n {
        for j in (1..=p.min(i)).rev() {
            row[j] = (j as u64).saturating_mul(row[j]).saturating_add(row[j - 1]);
        }
        row[0] = 0;
    }
    row[p]
}

fn binomial(n: usize, m: usize) -> u64 {
    if m > n {
        return 0;
    }
    let m = m.min(n - m);
    (0..m).fold(1u64, |acc, i| acc.saturating_mul((n - i) as u64) / (i as u64 + 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(v: &[f64]) -> Spectrum {
        Spectrum::decreasing(v.to_vec()).unwrap()
    }

    fn norms(v: &[f64]) -> NormSeq {
        NormSeq::new(v).unwrap()
    }

    #[test]
    fn stirling_and_partitions_agree() {
        let items: Vec<usize> = (0..6).collect();
        for p in 1..=6 {
            assert_eq!(set_partitions(&items, p).len() as u64, stirling2(6, p));
        }
        assert_eq!(stirling2(7, 3), 301);
        assert_eq!(stirling2(3, 0), 0);
        assert!(set_partitions(&items, 7).is_empty());
    }

    #[test]
    fn partitions_are_canonical() {
        let parts = set_partitions(&[4, 5, 6], 2);
        assert_eq!(
            parts,
            vec![
                vec![vec![4, 5], vec![6]],
                vec![vec![4, 6], vec![5]],
                vec![vec![4], vec![5, 6]],
            ]
        );
    }

    #[test]
    fn combinations_count() {
        assert_eq!(combinations(&[0, 1, 2, 3], 2).len(), 6);
        assert_eq!(combinations(&[0, 1], 0), vec![Vec::<usize>::new()]);
        assert_eq!(binomial(5, 2), 10);
    }

    #[test]
    fn two_candidates_for_two_norms() {
        let e = enumerate_efin(
            &spec(&[9.0, 5.0, 4.0, 2.0, 1.0]),
            &norms(&[3.5, 2.0]),
            EnumerationMode::Full,
            Caps::default(),
        )
        .unwrap();
        let lambda = spec(&[9.0, 5.0, 4.0, 2.0, 1.0]);
        let nus: Vec<Vec<f64>> = e.candidates.iter().map(|c| c.nu(&lambda).into_values()).collect();
        assert_eq!(nus.len(), 2);
        assert!(nus.contains(&vec![9.0, 5.0, 4.5, 4.0, 4.0]));
        assert!(nus.contains(&vec![9.0, 6.5, 5.0, 4.0, 2.0]));
        assert_eq!(e.stats.strict_provenances, 2);
    }

    #[test]
    fn single_entry() {
        let e = enumerate_efin(&spec(&[1.0]), &norms(&[2.0]), EnumerationMode::Full, Caps::default()).unwrap();
        assert_eq!(e.candidates.len(), 1);
        assert_eq!(e.candidates[0].mu.values(), &[2.0]);
    }

    #[test]
    fn consecutive_blocks_pair_in_opposite_order() {
        let lambda = spec(&[7.0, 6.0, 5.5, 4.0, 2.5, 1.0, 0.5, 0.3]);
        let e = enumerate_efin(
            &lambda,
            &norms(&[5.0, 4.5, 1.2, 1.0, 0.8, 0.5]),
            EnumerationMode::Consecutive,
            Caps::default(),
        )
        .unwrap();
        let target = [7.0, 6.0, 5.5, 5.3, 5.0, 4.0, 3.5, 3.5];
        let hit = e
            .candidates
            .iter()
            .find(|c| {
                c.nu(&lambda)
                    .values()
                    .iter()
                    .zip(target)
                    .all(|(a, b)| (a - b).abs() < 1e-9)
            })
            .expect("structured optimum present");
        assert_eq!(hit.r, 4);
        let ks: Vec<_> = hit.blocks.iter().map(|b| b.lambda_indices.clone()).collect();
        let js: Vec<_> = hit.blocks.iter().map(|b| b.norm_indices.clone()).collect();
        assert_eq!(ks, vec![vec![4, 5], vec![6], vec![7]]);
        assert_eq!(js, vec![vec![2, 3, 4, 5], vec![1], vec![0]]);
    }

    #[test]
    fn caps_stop_and_resume_to_the_same_answer() {
        let lambda = spec(&[9.0, 5.0, 4.0, 2.0, 1.0]);
        let b = norms(&[2.0, 0.25, 0.25, 0.25]);
        let whole = enumerate_efin(&lambda, &b, EnumerationMode::Full, Caps::default()).unwrap();
        let small = Caps {
            max_partition_pairs: 20,
        };
        let mut progress = match enumerate_efin(&lambda, &b, EnumerationMode::Full, small) {
            Err(Error::CapsExceeded(p)) => p,
            other => panic!("expected caps error, got {other:?}"),
        };
        let big = Caps {
            max_partition_pairs: 1_000,
        };
        let resumed = loop {
            match resume_efin(&lambda, &b, big, *progress) {
                Ok(e) => break e,
                Err(Error::CapsExceeded(p)) => progress = p,
                Err(e) => panic!("{e}"),
            }
        };
        assert_eq!(resumed.candidates, whole.candidates);
        assert_eq!(resumed.stats, whole.stats);
    }

    #[test]
    fn unsplittable_item_reports_its_cost() {
        let lambda = spec(&[9.0, 5.0, 4.0, 2.0, 1.0]);
        let b = norms(&[2.0, 0.25, 0.25, 0.25]);
        let caps = Caps { max_partition_pairs: 0 };
        match enumerate_efin(&lambda, &b, EnumerationMode::Full, caps) {
            Err(Error::CapsExceeded(p)) => {
                assert!(p.completed_items.is_empty());
                assert_eq!(p.next_item_cost, 1);
            }
            other => panic!("expected caps error, got {other:?}"),
        }
    }

    #[test]
    fn every_candidate_is_in_gamma() {
        let lambda = spec(&[5.75, 5.4, 4.25, 4.25, 3.0, 2.0]);
        let b = norms(&[2.0, 1.0, 0.5]);
        let e = enumerate_efin(&lambda, &b, EnumerationMode::Full, Caps::default()).unwrap();
        assert!(!e.candidates.is_empty());
        for c in &e.candidates {
            assert!(super::super::feasibility::gamma_membership(c.mu.values(), &b));
            assert!((c.mu.trace() - b.trace()).abs() < 1e-10 * b.trace());
            assert!(c.mu.values()[..c.r].iter().all(|&m| m == 0.0));
        }
    }
}
