//! Wall-clock comparison of the two upper bounds on λ₁: the per-vertex
//! row-sum maximum (touches every edge) and the degree-based closed form
//! (needs only `n`, `m`, `Δ`, `δ`).

use std::hint::black_box;
use std::io::Write;
use std::time::Instant;

use super::format::format_plain;
use crate::bounds::{rowsum_bounds, upper_degree_based};
use crate::error::{Error, Result};
use crate::graph::{Family, Graph};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TimedBound {
    RowSumUpper,
    JclUpper,
}

impl TimedBound {
    pub const ALL: [TimedBound; 2] = [TimedBound::RowSumUpper, TimedBound::JclUpper];

    pub fn tag(self) -> &'static str {
        match self {
            TimedBound::RowSumUpper => "rowsum_upper",
            TimedBound::JclUpper => "jcl_upper",
        }
    }

    pub fn parse(tag: &str) -> Option<TimedBound> {
        TimedBound::ALL.into_iter().find(|b| b.tag() == tag)
    }

    pub fn evaluate(self, g: &Graph, alpha: f64) -> Result<f64> {
        match self {
            TimedBound::RowSumUpper => rowsum_bounds(g, alpha).map(|r| r.upper),
            TimedBound::JclUpper => upper_degree_based(g, alpha),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct TimingRecord {
    pub family: String,
    pub n: usize,
    pub bound: TimedBound,
    pub reps: usize,
    pub mean_seconds: f64,
    pub stddev_seconds: f64,
    /// Bound value, for checking that both bounds saw the same graph.
    pub value: f64,
}

/// Warm-up evaluations run before timing starts.
pub const WARMUP_REPS: usize = 5;

/// Times each bound on each graph `reps` times after [`WARMUP_REPS`]
/// untimed runs. Graphs are built once, outside the timed region. Runs
/// sequentially so measurements do not contend.
pub fn timing_compare(
    families: &[Family],
    bounds: &[TimedBound],
    reps: usize,
    alpha: f64,
) -> Result<Vec<TimingRecord>> {
    if reps < 1 {
        return Err(Error::InvalidArgument(
            "repetitions must be at least 1".into(),
        ));
    }
    let mut out = Vec::new();
    for fam in families {
        let g = fam.build()?;
        for &b in bounds {
            let mut value = 0.0;
            for _ in 0..WARMUP_REPS {
                value = black_box(b.evaluate(black_box(&g), alpha)?);
            }
            let mut samples = Vec::with_capacity(reps);
            for _ in 0..reps {
                let t = Instant::now();
                value = black_box(b.evaluate(black_box(&g), alpha)?);
                samples.push(t.elapsed().as_secs_f64());
            }
            let mean = samples.iter().sum::<f64>() / reps as f64;
            let var = if reps > 1 {
                samples.iter().map(|s| (s - mean).powi(2)).sum::<f64>() / (reps - 1) as f64
            } else {
                0.0
            };
            out.push(TimingRecord {
                family: fam.tag().to_string(),
                n: g.order(),
                bound: b,
                reps,
                mean_seconds: mean,
                stddev_seconds: var.sqrt(),
                value,
            });
        }
    }
    Ok(out)
}

/// Stars, complete graphs and helms on 100, 200, …, 1000 vertices (helms
/// are sized by their wheel, so they have `2n − 1` vertices).
pub fn default_timing_families() -> Vec<Family> {
    let sizes: Vec<usize> = (1..=10).map(|k| 100 * k).collect();
    let mut out: Vec<Family> = sizes.iter().map(|&n| Family::Star(n)).collect();
    out.extend(sizes.iter().map(|&n| Family::Complete(n)));
    out.extend(sizes.iter().map(|&n| Family::Helm(n)));
    out
}

/// `family,n,bound,reps,mean_seconds,stddev_seconds`.
pub fn write_timing_csv<W: Write>(records: &[TimingRecord], out: W) -> Result<()> {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(out);
    w.write_record([
        "family",
        "n",
        "bound",
        "reps",
        "mean_seconds",
        "stddev_seconds",
    ])?;
    for r in records {
        w.write_record([
            r.family.clone(),
            r.n.to_string(),
            r.bound.tag().to_string(),
            r.reps.to_string(),
            format_plain(r.mean_seconds),
            format_plain(r.stddev_seconds),
        ])?;
    }
    w.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn records_are_well_formed() {
        let fams = [Family::Star(30), Family::Cycle(40)];
        let recs = timing_compare(&fams, &TimedBound::ALL, 3, 0.5).unwrap();
        assert_eq!(recs.len(), 4);
        for r in &recs {
            assert!(r.mean_seconds >= 0.0 && r.stddev_seconds >= 0.0);
            assert_eq!(r.reps, 3);
        }
        // C_40 is regular: both bounds give 2.
        assert!((recs[2].value - 2.0).abs() < 1e-12 && (recs[3].value - 2.0).abs() < 1e-12);
        let mut buf = Vec::new();
        write_timing_csv(&recs, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(text.lines().count(), 5);
        assert!(text
            .lines()
            .nth(1)
            .unwrap()
            .starts_with("star,30,rowsum_upper,3,"));
    }

    #[test]
    fn zero_reps_rejected() {
        assert!(timing_compare(&[Family::Star(3)], &TimedBound::ALL, 0, 0.5).is_err());
    }

    #[test]
    fn default_families_cover_three_kinds() {
        let f = default_timing_families();
        assert_eq!(f.len(), 30);
        assert_eq!(f[29], Family::Helm(1000));
    }
}
