//! Parallel sweeps over parameter ranges with resumable checkpoints, and the
//! counting functions built on them.

use std::fs;
use std::path::{Path, PathBuf};

use num_bigint::BigInt;
use num_traits::Signed;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{decic_family, jones_companion, perturbed_cyclotomic, sextic_family, FamilyParams};
use crate::arith::{is_squarefree_int, primes_up_to, Effort, SquarefreeVerdict};
use crate::disc::{conjecture_disc_identity, discriminant, IdentityCheck};
use crate::error::{Error, Result};
use crate::galois::{quintic_galois, Conclusion};
use crate::monogenic::{is_monogenic, Verdict};
use crate::poly::{reciprocal_to_half, IntPoly};

const CHECKPOINT_EVERY: usize = 1000;

#[derive(Debug, Clone, Default)]
pub struct SweepOptions {
    /// Worker threads; `None` uses every available core.
    pub jobs: Option<usize>,
    /// State file written after every block of candidates and read on start.
    pub checkpoint: Option<PathBuf>,
    /// Keep one row per candidate in count reports.
    pub keep_rows: bool,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartialCounts {
    pub processed: u64,
    pub count: u64,
}

/// Resumable sweep state.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Checkpoint {
    pub sweep: String,
    pub range: [i64; 2],
    pub completed_through: Option<i64>,
    pub partial_counts: PartialCounts,
}

impl Checkpoint {
    pub fn load(path: &Path) -> Result<Option<Checkpoint>> {
        if !path.exists() {
            return Ok(None);
        }
        let text = fs::read_to_string(path)?;
        serde_json::from_str(&text)
            .map(Some)
            .map_err(|e| Error::Io(format!("bad checkpoint {}: {e}", path.display())))
    }

    fn store(&self, path: &Path) -> Result<()> {
        let tmp = path.with_extension("tmp");
        fs::write(&tmp, serde_json::to_string_pretty(self).expect("serializable"))?;
        fs::rename(&tmp, path)?;
        Ok(())
    }
}

struct Outcome<R> {
    counts: PartialCounts,
    rows: Vec<R>,
    resumed_from: Option<i64>,
}

/// Evaluates `eval` over sorted `candidates` in blocks, in parallel within a
/// block, merging results in candidate order.
fn run_sweep<R, F>(
    sweep: &str,
    range: [i64; 2],
    candidates: &[i64],
    opts: &SweepOptions,
    keep: bool,
    eval: F,
) -> Result<Outcome<R>>
where
    R: Send,
    F: Fn(i64) -> Result<(bool, R)> + Sync,
{
    let mut counts = PartialCounts::default();
    let mut resumed_from = None;
    let mut start = 0;
    if let Some(path) = &opts.checkpoint {
        if let Some(cp) = Checkpoint::load(path)? {
            if cp.sweep != sweep || cp.range != range {
                return Err(Error::InvalidParams(format!(
                    "checkpoint {} belongs to sweep {} over {:?}",
                    path.display(),
                    cp.sweep,
                    cp.range
                )));
            }
            if let Some(done) = cp.completed_through {
                start = candidates.partition_point(|&c| c <= done);
                counts = cp.partial_counts;
                resumed_from = Some(done);
            }
        }
    }
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(j) = opts.jobs {
        builder = builder.num_threads(j.max(1));
    }
    let pool = builder
        .build()
        .map_err(|e| Error::Io(format!("thread pool: {e}")))?;
    let mut rows = Vec::new();
    for block in candidates[start..].chunks(CHECKPOINT_EVERY) {
        let results: Vec<Result<(bool, R)>> =
            pool.install(|| block.par_iter().map(|&c| eval(c)).collect());
        for r in results {
            let (hit, row) = r?;
            counts.processed += 1;
            counts.count += u64::from(hit);
            if keep {
                rows.push(row);
            }
        }
        if let Some(path) = &opts.checkpoint {
            Checkpoint {
                sweep: sweep.to_string(),
                range,
                completed_through: block.last().copied(),
                partial_counts: counts,
            }
            .store(path)?;
        }
    }
    Ok(Outcome {
        counts,
        rows,
        resumed_from,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CountDefinition {
    /// Sextic parameters `a` with `H(a)` squarefree.
    LfLemma,
    /// Sextic parameters `a` whose polynomial is proven monogenic.
    LfFull,
    /// `1 <= a <= X` with `F(a)` squarefree.
    Mh,
    /// Primes `p <= X` with `F(p)` squarefree.
    Nh,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LfMode {
    Lemma,
    Full,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LfRange {
    /// `|a| <= N`.
    Symmetric,
    /// `1 <= a <= N`.
    Positive,
}

#[derive(Debug, Clone, Serialize)]
pub struct CountRow {
    pub candidate: i64,
    #[serde(serialize_with = "crate::report::ser_bigint")]
    pub value: BigInt,
    pub squarefree: SquarefreeVerdict,
    pub monogenic: Option<Verdict>,
    pub counted: bool,
}

impl CountRow {
    pub const HEADER: [&'static str; 5] = ["candidate", "value", "squarefree", "monogenic", "counted"];

    pub fn record(&self) -> Vec<String> {
        vec![
            self.candidate.to_string(),
            self.value.to_string(),
            self.squarefree.label().to_string(),
            self.monogenic.map(verdict_label).unwrap_or("").to_string(),
            self.counted.to_string(),
        ]
    }
}

pub fn verdict_label(v: Verdict) -> &'static str {
    match v {
        Verdict::Monogenic => "monogenic",
        Verdict::NotMonogenic => "not_monogenic",
        Verdict::Unknown => "unknown",
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CountReport {
    pub definition: CountDefinition,
    pub polynomial: IntPoly,
    pub bound: u64,
    pub range: [i64; 2],
    pub count: u64,
    pub processed: u64,
    /// Present when rows were retained and the run did not resume from a checkpoint.
    pub witnesses: Option<Vec<i64>>,
    pub resumed_from: Option<i64>,
    /// Counts are exact over the stated finite range only.
    pub scope: &'static str,
    #[serde(skip)]
    pub rows: Vec<CountRow>,
}

fn finish_count(
    definition: CountDefinition,
    polynomial: IntPoly,
    bound: u64,
    range: [i64; 2],
    out: Outcome<CountRow>,
    keep: bool,
) -> CountReport {
    let witnesses = (keep && out.resumed_from.is_none())
        .then(|| out.rows.iter().filter(|r| r.counted).map(|r| r.candidate).collect());
    CountReport {
        definition,
        polynomial,
        bound,
        range,
        count: out.counts.count,
        processed: out.counts.processed,
        witnesses,
        resumed_from: out.resumed_from,
        scope: "finite range",
        rows: out.rows,
    }
}

fn bound_i64(n: u64) -> Result<i64> {
    i64::try_from(n)
        .ok()
        .filter(|&v| v < i64::MAX / 4)
        .ok_or_else(|| Error::InvalidParams("bound too large".into()))
}

/// Counts sextic parameters with `H(a)` squarefree (`Lemma`) or with a proven
/// monogenic sextic (`Full`).
pub fn count_lf(
    n: u64,
    mode: LfMode,
    range: LfRange,
    effort: &Effort,
    opts: &SweepOptions,
) -> Result<CountReport> {
    if n < 1 {
        return Err(Error::InvalidParams("N must be at least 1".into()));
    }
    let n = bound_i64(n)?;
    let (lo, hi) = match range {
        LfRange::Symmetric => (-n, n),
        LfRange::Positive => (1, n),
    };
    let candidates: Vec<i64> = (lo..=hi).collect();
    let (definition, label) = match mode {
        LfMode::Lemma => (CountDefinition::LfLemma, "lf-lemma"),
        LfMode::Full => (CountDefinition::LfFull, "lf-full"),
    };
    let out = run_sweep(label, [lo, hi], &candidates, opts, opts.keep_rows, |a| {
        let m = sextic_family(&BigInt::from(a));
        let squarefree = is_squarefree_int(&m.h_value, effort);
        let (counted, monogenic) = match mode {
            LfMode::Lemma => (squarefree.is_squarefree(), None),
            LfMode::Full => {
                let v = is_monogenic(&m.f, effort)?.verdict;
                (v == Verdict::Monogenic, Some(v))
            }
        };
        Ok((
            counted,
            CountRow {
                candidate: a,
                value: m.h_value,
                squarefree,
                monogenic,
                counted,
            },
        ))
    })?;
    Ok(finish_count(
        definition,
        super::sextic_disc_poly(),
        n as u64,
        [lo, hi],
        out,
        opts.keep_rows,
    ))
}

fn count_squarefree_values(
    definition: CountDefinition,
    label: &str,
    x: u64,
    poly: &IntPoly,
    candidates: Vec<i64>,
    effort: &Effort,
    opts: &SweepOptions,
) -> Result<CountReport> {
    let hi = bound_i64(x)?;
    let out = run_sweep(label, [1, hi], &candidates, opts, opts.keep_rows, |a| {
        let value = poly.eval_i64(a);
        let squarefree = is_squarefree_int(&value, effort);
        let counted = squarefree.is_squarefree();
        Ok((
            counted,
            CountRow {
                candidate: a,
                value,
                squarefree,
                monogenic: None,
                counted,
            },
        ))
    })?;
    Ok(finish_count(definition, poly.clone(), x, [1, hi], out, opts.keep_rows))
}

/// `#{1 <= a <= X : F(a) squarefree}`.
pub fn count_mh(x: u64, poly: &IntPoly, effort: &Effort, opts: &SweepOptions) -> Result<CountReport> {
    let hi = bound_i64(x)?;
    let candidates = (1..=hi).collect();
    count_squarefree_values(CountDefinition::Mh, "mh", x, poly, candidates, effort, opts)
}

/// `#{p <= X prime : F(p) squarefree}`.
pub fn count_nh(x: u64, poly: &IntPoly, effort: &Effort, opts: &SweepOptions) -> Result<CountReport> {
    bound_i64(x)?;
    let candidates = primes_up_to(x).into_iter().map(|p| p as i64).collect();
    count_squarefree_values(CountDefinition::Nh, "nh", x, poly, candidates, effort, opts)
}

/// One prime of the degree-10 family scan.
#[derive(Debug, Clone, Serialize)]
pub struct DecicScanRow {
    pub p: u64,
    #[serde(serialize_with = "crate::report::ser_bigint")]
    pub h_value: BigInt,
    pub h_squarefree: SquarefreeVerdict,
    /// `h(p)` is squarefree.
    pub listed: bool,
    pub f_verdict: Verdict,
    pub g_verdict: Verdict,
    /// Galois group of the quintic for `p ≡ 2 (mod 3)`.
    pub g_galois: Option<String>,
}

impl DecicScanRow {
    pub const HEADER: [&'static str; 7] =
        ["p", "h_value", "h_squarefree", "listed", "f_verdict", "g_verdict", "g_galois"];

    pub fn record(&self) -> Vec<String> {
        vec![
            self.p.to_string(),
            self.h_value.to_string(),
            self.h_squarefree.label().into(),
            self.listed.to_string(),
            verdict_label(self.f_verdict).into(),
            verdict_label(self.g_verdict).into(),
            self.g_galois.clone().unwrap_or_default(),
        ]
    }
}

fn conclusion_label(c: &Conclusion) -> String {
    match c {
        Conclusion::ProvenGroup(g) => g.clone(),
        Conclusion::Constraint(_) => "constrained".into(),
        Conclusion::Inconclusive => "inconclusive".into(),
    }
}

/// Every prime `p <= pmax` with `h(p)`, its squarefree status, and full
/// monogenicity verdicts for the decic and its quintic companion.
pub fn decic_prime_scan(pmax: u64, effort: &Effort, opts: &SweepOptions) -> Result<Vec<DecicScanRow>> {
    let hi = bound_i64(pmax)?;
    let candidates: Vec<i64> = primes_up_to(pmax).into_iter().map(|p| p as i64).collect();
    let out = run_sweep("thm13", [2, hi], &candidates, opts, true, |p| {
        let m = decic_family(&BigInt::from(p));
        let h_squarefree = is_squarefree_int(&m.h_value, effort);
        let listed = h_squarefree.is_squarefree();
        let f_verdict = is_monogenic(&m.f, effort)?.verdict;
        let g_verdict = is_monogenic(&m.g, effort)?.verdict;
        let g_galois = if p % 3 == 2 {
            Some(conclusion_label(&quintic_galois(&m.g, effort)?.conclusion))
        } else {
            None
        };
        Ok((
            listed,
            DecicScanRow {
                p: p as u64,
                h_value: m.h_value,
                h_squarefree,
                listed,
                f_verdict,
                g_verdict,
                g_galois,
            },
        ))
    })?;
    Ok(out.rows)
}

#[derive(Debug, Clone, Serialize)]
pub struct SexticRow {
    pub a: i64,
    #[serde(serialize_with = "crate::report::ser_bigint")]
    pub h_value: BigInt,
    pub h_squarefree: SquarefreeVerdict,
    #[serde(serialize_with = "crate::report::ser_bigint")]
    pub disc_g: BigInt,
    /// `|Δ(g_a)| = |H(a)|`.
    pub disc_matches_h: bool,
    pub f_verdict: Verdict,
}

impl SexticRow {
    pub const HEADER: [&'static str; 6] =
        ["a", "h_value", "h_squarefree", "disc_g", "disc_matches_h", "f_verdict"];

    pub fn record(&self) -> Vec<String> {
        vec![
            self.a.to_string(),
            self.h_value.to_string(),
            self.h_squarefree.label().into(),
            self.disc_g.to_string(),
            self.disc_matches_h.to_string(),
            verdict_label(self.f_verdict).into(),
        ]
    }
}

pub fn sextic_sweep(lo: i64, hi: i64, effort: &Effort, opts: &SweepOptions) -> Result<Vec<SexticRow>> {
    if lo > hi {
        return Err(Error::InvalidParams("empty range".into()));
    }
    let candidates: Vec<i64> = (lo..=hi).collect();
    let out = run_sweep("sextic", [lo, hi], &candidates, opts, true, |a| {
        let m = sextic_family(&BigInt::from(a));
        let h_squarefree = is_squarefree_int(&m.h_value, effort);
        let disc_g = discriminant(&m.g)?;
        let f_verdict = is_monogenic(&m.f, effort)?.verdict;
        Ok((
            h_squarefree.is_squarefree(),
            SexticRow {
                a,
                disc_matches_h: disc_g.abs() == m.h_value.abs(),
                h_value: m.h_value,
                h_squarefree,
                disc_g,
                f_verdict,
            },
        ))
    })?;
    Ok(out.rows)
}

#[derive(Debug, Clone, Serialize)]
pub struct JonesRow {
    pub t: i64,
    pub f: IntPoly,
    pub g: IntPoly,
    #[serde(serialize_with = "crate::report::ser_bigint")]
    pub f_one_times_f_minus_one: BigInt,
    pub squarefree: SquarefreeVerdict,
    /// Closed-form discriminant check, available for `b = 1` and `a <= 1`.
    pub identity: Option<IdentityCheck>,
    pub verdict: Verdict,
}

impl JonesRow {
    pub const HEADER: [&'static str; 7] = [
        "t",
        "f",
        "g",
        "f1_fm1",
        "squarefree",
        "identity_holds",
        "verdict",
    ];

    pub fn record(&self) -> Vec<String> {
        vec![
            self.t.to_string(),
            self.f.to_json(),
            self.g.to_json(),
            self.f_one_times_f_minus_one.to_string(),
            self.squarefree.label().into(),
            self.identity
                .as_ref()
                .map(|c| c.holds.to_string())
                .unwrap_or_default(),
            verdict_label(self.verdict).into(),
        ]
    }
}

/// Perturbed cyclotomics over a range of `t`.
pub fn jones_sweep(
    q: u64,
    a: u32,
    b: u32,
    r: i64,
    t_range: (i64, i64),
    effort: &Effort,
    opts: &SweepOptions,
) -> Result<Vec<JonesRow>> {
    let (lo, hi) = t_range;
    if lo > hi {
        return Err(Error::InvalidParams("empty range".into()));
    }
    FamilyParams::new(q, a, b, r, 0)?;
    let candidates: Vec<i64> = (lo..=hi).collect();
    let label = format!("jones-{q}-{a}-{b}-{r}");
    let out = run_sweep(&label, [lo, hi], &candidates, opts, true, |t| {
        let params = FamilyParams::new(q, a, b, r, t)?;
        let f = perturbed_cyclotomic(&params)?;
        let closed = a <= 1 && b == 1;
        let g = if closed {
            jones_companion(q, a, r, t)?
        } else {
            reciprocal_to_half(&f)?
        };
        let identity = if closed {
            Some(conjecture_disc_identity(q, a, r, t)?)
        } else {
            None
        };
        let ends = f.eval_i64(1) * f.eval_i64(-1);
        let squarefree = is_squarefree_int(&ends, effort);
        let verdict = is_monogenic(&f, effort)?.verdict;
        Ok((
            verdict == Verdict::Monogenic,
            JonesRow {
                t,
                f,
                g,
                f_one_times_f_minus_one: ends,
                squarefree,
                identity,
                verdict,
            },
        ))
    })?;
    Ok(out.rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lf_small() {
        let e = Effort::default();
        let opts = SweepOptions {
            keep_rows: true,
            ..Default::default()
        };
        let r = count_lf(1, LfMode::Lemma, LfRange::Symmetric, &e, &opts).unwrap();
        assert_eq!(r.count, 2);
        assert_eq!(r.witnesses, Some(vec![-1, 1]));
        let full = count_lf(1, LfMode::Full, LfRange::Symmetric, &e, &opts).unwrap();
        assert!(full.count >= r.count);
    }

    #[test]
    fn nh_mh_small() {
        let e = Effort::default();
        let opts = SweepOptions::default();
        let h = super::super::sextic_disc_poly();
        assert_eq!(count_nh(1, &h, &e, &opts).unwrap().count, 0);
        let n10 = count_nh(10, &h, &e, &opts).unwrap();
        let m10 = count_mh(10, &h, &e, &opts).unwrap();
        assert!(m10.count >= n10.count);
        let with_rows = count_nh(
            10,
            &h,
            &e,
            &SweepOptions {
                keep_rows: true,
                ..Default::default()
            },
        )
        .unwrap();
        assert!(!with_rows.witnesses.unwrap().contains(&2));
    }

    #[test]
    fn checkpoint_resume() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("state.json");
        let e = Effort::default();
        let h = super::super::sextic_disc_poly();
        let opts = SweepOptions {
            checkpoint: Some(path.clone()),
            jobs: Some(2),
            keep_rows: false,
        };
        let full = count_mh(2500, &h, &e, &SweepOptions::default()).unwrap();
        // simulate an interrupted run that finished the first block
        Checkpoint {
            sweep: "mh".into(),
            range: [1, 2500],
            completed_through: Some(1000),
            partial_counts: PartialCounts {
                processed: 1000,
                count: count_mh(1000, &h, &e, &SweepOptions::default()).unwrap().count,
            },
        }
        .store(&path)
        .unwrap();
        let resumed = count_mh(2500, &h, &e, &opts).unwrap();
        assert_eq!(resumed.resumed_from, Some(1000));
        assert_eq!(resumed.count, full.count);
        assert_eq!(resumed.processed, 2500);
        let cp = Checkpoint::load(&path).unwrap().unwrap();
        assert_eq!(cp.completed_through, Some(2500));
        // a checkpoint from another sweep is refused
        assert!(count_nh(2500, &h, &e, &opts).is_err());
    }

    #[test]
    fn decic_scan_small() {
        let rows = decic_prime_scan(10, &Effort::default(), &SweepOptions::default()).unwrap();
        let listed: Vec<u64> = rows.iter().filter(|r| r.listed).map(|r| r.p).collect();
        assert_eq!(listed, vec![3, 5, 7]);
        assert_eq!(rows[0].p, 2);
        assert!(!rows[0].listed);
    }
}
