//! Exhaustive dichotomy and path-decomposition surveys over graph streams.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::canon::canonical_form;
use crate::decomposer::{decompose_4pc, decompose_4pc_exact, Feasibility, Provenance};
use crate::gallai::{gallai_decomposition, GallaiError};
use crate::graph::{class_g_report, validate_decomposition, Graph};
use crate::hanging_square::{recognize_hanging_square, verify_hs_certificate};
use crate::io::emit_graph6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurveyOptions {
    /// Also run the path-decomposition pipeline on members within its edge bound.
    pub gallai: bool,
    /// Record wall-clock time per phase.
    pub timing: bool,
}

impl Default for SurveyOptions {
    fn default() -> Self {
        SurveyOptions {
            gallai: true,
            timing: false,
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct LevelCounts {
    pub n: usize,
    pub members: usize,
    pub hanging_square: usize,
    pub decomposable: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Violation {
    pub canonical_form: String,
    pub graph6: String,
    pub detail: String,
}

/// Seconds spent in each phase, summed over all graphs and workers.
#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize, Deserialize)]
pub struct PhaseTiming {
    pub recognize: f64,
    pub exact: f64,
    pub constructive: f64,
    pub gallai: f64,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct GallaiCounts {
    /// Members with at most 4⌈n/2⌉ edges.
    pub eligible: usize,
    pub within_bound: usize,
    /// Eligible members too large for the exact fallback.
    pub skipped: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SurveyReport {
    pub graphs: usize,
    pub non_members: usize,
    pub per_n: Vec<LevelCounts>,
    pub violations: Vec<Violation>,
    pub fallback_count: usize,
    pub merge_exhausted_count: usize,
    pub gallai: Option<GallaiCounts>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timing: Option<PhaseTiming>,
}

impl SurveyReport {
    /// Every member is exactly one of hanging-square or decomposable.
    pub fn dichotomy_holds(&self) -> bool {
        self.violations.is_empty()
            && self
                .per_n
                .iter()
                .all(|c| c.hanging_square + c.decomposable == c.members)
    }

    pub fn members(&self) -> usize {
        self.per_n.iter().map(|c| c.members).sum()
    }

    /// One row per vertex count.
    pub fn to_csv(&self) -> Result<String, csv::Error> {
        let mut w = csv::Writer::from_writer(Vec::new());
        for row in &self.per_n {
            w.serialize(row)?;
        }
        let bytes = w.into_inner().map_err(|e| e.into_error())?;
        Ok(String::from_utf8(bytes).expect("csv output is UTF-8"))
    }
}

#[derive(Default)]
struct GraphOutcome {
    member: bool,
    n: usize,
    hanging_square: bool,
    decomposable: bool,
    fallback: bool,
    merge_exhausted: bool,
    gallai: Option<GallaiOutcome>,
    problems: Vec<String>,
    timing: [Duration; 4],
}

#[derive(Clone, Copy)]
enum GallaiOutcome {
    Within,
    Over,
    Skipped,
}

fn timed<T>(slot: &mut Duration, f: impl FnOnce() -> T) -> T {
    let start = Instant::now();
    let out = f();
    *slot += start.elapsed();
    out
}

fn survey_one(g: &Graph, options: SurveyOptions) -> GraphOutcome {
    let mut out = GraphOutcome {
        n: g.vertex_count(),
        ..GraphOutcome::default()
    };
    if !class_g_report(g).member {
        return out;
    }
    out.member = true;
    let [t_rec, t_exact, t_cons, t_gallai] = &mut out.timing;

    let cert = timed(t_rec, || recognize_hanging_square(g)).ok();
    if let Some(c) = &cert {
        if !verify_hs_certificate(g, c) {
            out.problems.push("certificate fails verification".into());
        }
    }
    out.hanging_square = cert.is_some();

    match timed(t_exact, || decompose_4pc_exact(g)) {
        Ok(Feasibility::Feasible(d)) => {
            out.decomposable = true;
            if !validate_decomposition(g, &d).is_valid() {
                out.problems
                    .push("oracle decomposition fails validation".into());
            }
        }
        Ok(Feasibility::Infeasible) => {}
        Err(e) => out.problems.push(format!("oracle: {e}")),
    }
    if out.hanging_square == out.decomposable {
        out.problems.push(format!(
            "dichotomy: hanging_square={} decomposable={}",
            out.hanging_square, out.decomposable
        ));
    }

    match timed(t_cons, || decompose_4pc(g)) {
        Ok(r) => {
            out.fallback = r.provenance == Provenance::OracleFallback;
            if let Some(d) = r.decomposition() {
                if !validate_decomposition(g, d).is_valid() {
                    out.problems.push("decomposition fails validation".into());
                }
            }
            if r.certificate().is_some() != out.hanging_square {
                out.problems
                    .push("decompose_4pc disagrees with recognition".into());
            }
        }
        Err(e) => out.problems.push(format!("decompose_4pc: {e}")),
    }

    if options.gallai && g.edge_count() <= 4 * g.vertex_count().div_ceil(2) {
        out.gallai = Some(match timed(t_gallai, || gallai_decomposition(g)) {
            Ok(r) => {
                if !validate_decomposition(g, &r.paths).is_valid()
                    || !r.paths.elements.iter().all(|w| w.is_path())
                {
                    out.problems
                        .push("path decomposition fails validation".into());
                }
                if r.within_bound {
                    GallaiOutcome::Within
                } else {
                    out.problems.push(format!(
                        "path decomposition has {} paths, bound {}",
                        r.paths.len(),
                        r.bound
                    ));
                    GallaiOutcome::Over
                }
            }
            Err(GallaiError::TooLarge { .. }) => GallaiOutcome::Skipped,
            Err(e) => {
                out.merge_exhausted = matches!(e, GallaiError::MergeExhausted { .. });
                out.problems.push(format!("path decomposition: {e}"));
                GallaiOutcome::Over
            }
        });
    }
    out
}

/// Runs recognition, the exact oracle, the constructive decomposer and
/// (optionally) the path-decomposition pipeline on every graph. Graphs outside
/// the class are counted and otherwise skipped. The report does not depend on
/// scheduling.
pub fn dichotomy_survey(graphs: &[Graph], options: SurveyOptions) -> SurveyReport {
    let outcomes: Vec<GraphOutcome> = graphs.par_iter().map(|g| survey_one(g, options)).collect();

    let mut per_n: BTreeMap<usize, LevelCounts> = BTreeMap::new();
    let mut violations = Vec::new();
    let mut gallai = GallaiCounts::default();
    let mut time = [Duration::ZERO; 4];
    let mut report = SurveyReport {
        graphs: graphs.len(),
        non_members: 0,
        per_n: vec![],
        violations: vec![],
        fallback_count: 0,
        merge_exhausted_count: 0,
        gallai: None,
        timing: None,
    };
    for (g, o) in graphs.iter().zip(&outcomes) {
        for (total, t) in time.iter_mut().zip(o.timing) {
            *total += t;
        }
        if !o.member {
            report.non_members += 1;
            continue;
        }
        let level = per_n.entry(o.n).or_insert(LevelCounts {
            n: o.n,
            ..LevelCounts::default()
        });
        level.members += 1;
        level.hanging_square += o.hanging_square as usize;
        level.decomposable += o.decomposable as usize;
        report.fallback_count += o.fallback as usize;
        report.merge_exhausted_count += o.merge_exhausted as usize;
        match o.gallai {
            Some(GallaiOutcome::Within) => {
                gallai.eligible += 1;
                gallai.within_bound += 1;
            }
            Some(GallaiOutcome::Over) => gallai.eligible += 1,
            Some(GallaiOutcome::Skipped) => {
                gallai.eligible += 1;
                gallai.skipped += 1;
            }
            None => {}
        }
        if !o.problems.is_empty() {
            violations.push(Violation {
                canonical_form: canonical_form(g),
                graph6: emit_graph6(g),
                detail: o.problems.join("; "),
            });
        }
    }
    violations.sort();
    report.per_n = per_n.into_values().collect();
    report.violations = violations;
    report.gallai = options.gallai.then_some(gallai);
    report.timing = options.timing.then(|| PhaseTiming {
        recognize: time[0].as_secs_f64(),
        exact: time[1].as_secs_f64(),
        constructive: time[2].as_secs_f64(),
        gallai: time[3].as_secs_f64(),
    });
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_surveys() {
        let path = Graph::path(&[0, 1, 2, 3]);
        let r = dichotomy_survey(&[path], SurveyOptions::default());
        assert_eq!(
            r.per_n,
            vec![LevelCounts {
                n: 4,
                members: 1,
                hanging_square: 1,
                decomposable: 0
            }]
        );
        assert!(r.dichotomy_holds());

        let c4 = Graph::cycle(&[0, 1, 2, 3]);
        let star = Graph::from_edges([(0, 1), (0, 2)]).unwrap();
        let r = dichotomy_survey(&[c4, star], SurveyOptions::default());
        assert_eq!(r.non_members, 1);
        assert_eq!(
            r.per_n,
            vec![LevelCounts {
                n: 4,
                members: 1,
                hanging_square: 0,
                decomposable: 1
            }]
        );
        assert!(r.timing.is_none());
        assert!(r
            .to_csv()
            .unwrap()
            .starts_with("n,members,hanging_square,decomposable\n4,1,0,1"));
    }
}
