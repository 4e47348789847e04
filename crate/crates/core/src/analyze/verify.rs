//! Per-graph verdicts for the cubic three-colouring statement: K4 has no
//! colourings, the prism has two classes, every other connected cubic
//! graph has one.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::kempe_classes;
use crate::graph::{graph6, iso, Graph};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Verdict {
    Pass,
    Fail,
    Skipped,
}

/// One JSON line of a verification report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictRecord {
    pub graph6: String,
    pub n: usize,
    pub colorings: usize,
    pub classes: usize,
    pub sizes: Vec<usize>,
    pub verdict: Verdict,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    /// Colouring pairs on which the constructive solver was cross-checked.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub solver_pairs: Option<usize>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub graphs: usize,
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
}

impl Summary {
    pub fn from_records(records: &[VerdictRecord]) -> Self {
        let mut s = Summary {
            graphs: records.len(),
            ..Summary::default()
        };
        for r in records {
            match r.verdict {
                Verdict::Pass => s.pass += 1,
                Verdict::Fail => s.fail += 1,
                Verdict::Skipped => s.skipped += 1,
            }
        }
        s
    }

    pub fn all_pass(&self) -> bool {
        self.fail == 0
    }
}

impl fmt::Display for Summary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} graphs, {} PASS", self.graphs, self.pass)?;
        if self.fail > 0 {
            write!(f, ", {} FAIL", self.fail)?;
        }
        if self.skipped > 0 {
            write!(f, ", {} SKIPPED", self.skipped)?;
        }
        Ok(())
    }
}

fn skipped(g: &Graph, reason: String) -> VerdictRecord {
    VerdictRecord {
        graph6: graph6::encode(g),
        n: g.n(),
        colorings: 0,
        classes: 0,
        sizes: Vec::new(),
        verdict: Verdict::Skipped,
        reason: Some(reason),
        solver_pairs: None,
    }
}

/// Verdict for one graph. Non-cubic or disconnected graphs, and graphs whose
/// colourings exceed `ceiling`, are skipped with a reason.
pub fn verify_graph(g: &Graph, ceiling: u64) -> VerdictRecord {
    if !g.is_cubic() {
        return skipped(g, "not cubic".into());
    }
    if !g.is_connected() {
        return skipped(g, "not connected".into());
    }
    let report = match kempe_classes(g, 3, ceiling) {
        Ok((r, _)) => r,
        Err(e) => return skipped(g, e.to_string()),
    };
    let (ok, expect) = if iso::is_k4(g) {
        (report.colorings == 0, "K4 has no 3-colourings")
    } else if iso::is_prism(g) {
        (report.classes == 2, "the prism has two classes")
    } else {
        (report.classes == 1, "expected a single class")
    };
    VerdictRecord {
        graph6: report.graph6,
        n: g.n(),
        colorings: report.colorings,
        classes: report.classes,
        sizes: report.sizes,
        verdict: if ok { Verdict::Pass } else { Verdict::Fail },
        reason: (!ok).then(|| expect.to_string()),
        solver_pairs: None,
    }
}

/// Verdicts in input order. `jobs = 0` uses rayon's default pool size.
pub fn verify_corpus(graphs: &[Graph], ceiling: u64, jobs: usize) -> (Vec<VerdictRecord>, Summary) {
    let records = super::par_map(jobs, graphs, |g| verify_graph(g, ceiling));
    let summary = Summary::from_records(&records);
    (records, summary)
}
