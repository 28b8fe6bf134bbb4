//! The end-to-end analysis pipeline and its JSON report.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::analysis::{
    dgroup_summary, graph_data, is_dgroup_spectral, verify_decomposition_evaluated, AnalysisOptions, DGroupSummary,
    DecompositionReport, DecompositionStatus,
};
use crate::block_square::{is_admissible_block_square, BlockPartition};
use crate::error::Result;
use crate::prime_graph::PrimeGraph;
use crate::spec_file::GroupSpecFile;
use crate::spectrum::Spectrum;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DGroupSection {
    pub spectral: bool,
    pub witness: Option<DGroupSummary>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockSquareSection {
    pub found: bool,
    pub partitions: Vec<BlockPartition>,
    /// Every reported partition is admissible (vacuously true when none).
    pub admissible: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub name: String,
    pub order: u64,
    /// Ascending `[size, multiplicity]` pairs.
    pub spectrum: Spectrum,
    pub graph: PrimeGraph,
    pub connected: bool,
    pub dgroup: DGroupSection,
    pub block_square: BlockSquareSection,
    pub decomposition: DecompositionReport,
}

pub fn analyze(spec: &GroupSpecFile, opts: &AnalysisOptions) -> Result<AnalysisReport> {
    let group = spec.construct.evaluate_with(opts.eval())?;
    let data = graph_data(&group, opts)?;
    let spectral = is_dgroup_spectral(&data.spectrum)?;
    let witness = dgroup_summary(&group, opts)?;
    let mut admissible = true;
    for p in &data.partitions {
        admissible &= is_admissible_block_square(&data.graph, p)?;
    }
    let decomposition = verify_decomposition_evaluated(&spec.construct, &group, &data, opts)?;
    Ok(AnalysisReport {
        name: spec.name.clone(),
        order: data.order,
        connected: data.graph.is_connected(),
        spectrum: data.spectrum,
        graph: data.graph,
        dgroup: DGroupSection { spectral, witness },
        block_square: BlockSquareSection {
            found: !data.partitions.is_empty(),
            partitions: data.partitions,
            admissible,
        },
        decomposition,
    })
}

impl AnalysisReport {
    /// Internal consistency checks; each violation is described in one line.
    pub fn violations(&self) -> Vec<String> {
        let mut out = Vec::new();
        match self.spectrum.total() {
            Ok(t) if t == self.order => {}
            Ok(t) => out.push(format!("class sizes sum to {t}, not the order {}", self.order)),
            Err(e) => out.push(format!("class size total: {e}")),
        }
        if self.dgroup.spectral != self.dgroup.witness.is_some() {
            out.push(format!(
                "spectral D-group test says {} but the structural witness is {}",
                self.dgroup.spectral,
                if self.dgroup.witness.is_some() { "present" } else { "absent" }
            ));
        }
        if let Some(w) = &self.dgroup.witness {
            if w.class_size_set != w.predicted_class_sizes() {
                out.push(format!(
                    "D-group class sizes {:?} differ from {{1, |A|, |B|/|Z|}} = {:?}",
                    w.class_size_set,
                    w.predicted_class_sizes()
                ));
            }
        }
        for &p in self.graph.vertices() {
            let nn: BTreeSet<u64> = self.graph.non_neighbors(p);
            if !self.graph.is_clique(&nn).unwrap_or(false) {
                out.push(format!("non-neighbours of {p} do not form a clique"));
            }
        }
        if !self.block_square.admissible {
            out.push("a block partition is not admissible".into());
        }
        if self.decomposition.status == DecompositionStatus::CounterexampleCandidate {
            out.push(format!("block-square decomposition failed: {}", self.decomposition.notes.join("; ")));
        }
        out
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports always serialize");
        s.push('\n');
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structured::GroupExpr;

    #[test]
    fn f21_report() {
        let spec = GroupSpecFile::new("F21", GroupExpr::frobenius(vec![7], 3));
        let r = analyze(&spec, &AnalysisOptions::default()).unwrap();
        assert_eq!(r.order, 21);
        assert_eq!(r.spectrum.to_sorted_vec(), vec![1, 3, 3, 7, 7]);
        assert!(r.dgroup.spectral);
        assert!(!r.connected);
        assert!(r.violations().is_empty());
        let json = r.to_json();
        assert!(json.contains("\"status\": \"NOT_BLOCK_SQUARE\""));
        assert_eq!(serde_json::from_str::<AnalysisReport>(&json).unwrap(), r);
    }

    #[test]
    fn s4_is_not_a_block_square() {
        let spec = GroupSpecFile::new(
            "S4",
            GroupExpr::Perm { degree: 4, generators: vec![vec![1, 2, 3, 0], vec![1, 0, 2, 3]] },
        );
        let r = analyze(&spec, &AnalysisOptions::default()).unwrap();
        assert!(!r.block_square.found);
        assert!(r.connected);
        assert!(r.dgroup.witness.is_none());
        assert!(r.violations().is_empty());
    }

    #[test]
    fn violations_detect_tampering() {
        let spec = GroupSpecFile::new("Z6", GroupExpr::cyclic(6));
        let mut r = analyze(&spec, &AnalysisOptions::default()).unwrap();
        assert!(r.violations().is_empty());
        r.order = 7;
        r.dgroup.spectral = true;
        assert_eq!(r.violations().len(), 2);
    }
}
