//! Exact discharging on connected plane graphs.
//!
//! Vertices start with `d(v) − 4`, faces with `ℓ(f) − 4`; by Euler's
//! formula the total is `−8`. Four rules then move charge around, each
//! applied everywhere before the next one starts. All arithmetic is exact.

mod concavity;
mod rules;

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::graph::{Face, PlaneGraph};

pub use concavity::{concavity_f, concavity_min};
pub use rules::apply_rules;

/// An exact rational charge.
pub type Charge = BigRational;

pub(crate) fn ratio(n: i64, d: i64) -> Charge {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Phase {
    Initial,
    AfterR1,
    AfterR2,
    AfterR3,
    AfterR4,
}

impl Phase {
    pub const ALL: [Phase; 5] = [
        Phase::Initial,
        Phase::AfterR1,
        Phase::AfterR2,
        Phase::AfterR3,
        Phase::AfterR4,
    ];

    /// Number of rules applied so far.
    pub fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for Phase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Phase::Initial => "initial",
            Phase::AfterR1 => "after-R1",
            Phase::AfterR2 => "after-R2",
            Phase::AfterR3 => "after-R3",
            Phase::AfterR4 => "after-R4",
        };
        f.write_str(s)
    }
}

/// Charges on every vertex, face and edge at one phase.
///
/// Edge ids follow [`crate::Graph::edges`]; faces follow
/// [`PlaneGraph::faces`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChargeLedger {
    pub phase: Phase,
    pub vertex: Vec<Charge>,
    pub face: Vec<Charge>,
    pub edge: Vec<Charge>,
}

impl ChargeLedger {
    pub fn total(&self) -> Charge {
        self.vertex
            .iter()
            .chain(&self.face)
            .chain(&self.edge)
            .fold(Charge::zero(), |acc, c| acc + c)
    }

    pub fn edges_neutral(&self) -> bool {
        self.edge.iter().all(Zero::is_zero)
    }
}

/// The result of running all four rules.
#[derive(Debug, Clone)]
pub struct Discharge {
    pub faces: Vec<Face>,
    /// One ledger per phase, in [`Phase::ALL`] order.
    pub snapshots: Vec<ChargeLedger>,
}

impl Discharge {
    pub fn at(&self, phase: Phase) -> &ChargeLedger {
        &self.snapshots[phase.index()]
    }

    pub fn final_ledger(&self) -> &ChargeLedger {
        self.snapshots.last().expect("all phases recorded")
    }
}

pub fn initial_charges(pg: &PlaneGraph) -> Result<ChargeLedger> {
    let faces = pg.faces()?;
    Ok(initial_ledger(pg, &faces))
}

fn initial_ledger(pg: &PlaneGraph, faces: &[Face]) -> ChargeLedger {
    let g = pg.graph();
    ChargeLedger {
        phase: Phase::Initial,
        vertex: (0..g.vertex_count())
            .map(|v| ratio(g.degree(v) as i64 - 4, 1))
            .collect(),
        face: faces.iter().map(|f| ratio(f.len() as i64 - 4, 1)).collect(),
        edge: vec![Charge::zero(); g.edge_count()],
    }
}

/// Summary of a full discharging run.
#[derive(Debug, Clone)]
pub struct AuditReport {
    pub d_param: usize,
    pub totals: Vec<(Phase, Charge)>,
    pub conserved: bool,
    pub negative_vertices: Vec<(usize, Charge)>,
    pub negative_faces: Vec<(usize, Charge)>,
    pub faces_nonnegative: bool,
    /// Every vertex of degree at least 4 ends nonnegative.
    pub high_vertices_nonnegative: bool,
    pub discharge: Discharge,
}

pub fn audit(pg: &PlaneGraph, d_param: usize) -> Result<AuditReport> {
    let discharge = apply_rules(pg, d_param)?;
    let g = pg.graph();
    let totals: Vec<(Phase, Charge)> = discharge.snapshots.iter().map(|l| (l.phase, l.total())).collect();
    let initial = &totals[0].1;
    let conserved = totals.iter().all(|(_, t)| t == initial);
    let last = discharge.final_ledger();
    let negative_vertices: Vec<(usize, Charge)> = last
        .vertex
        .iter()
        .enumerate()
        .filter(|(_, c)| c.is_negative())
        .map(|(v, c)| (v, c.clone()))
        .collect();
    let negative_faces: Vec<(usize, Charge)> = last
        .face
        .iter()
        .enumerate()
        .filter(|(_, c)| c.is_negative())
        .map(|(f, c)| (f, c.clone()))
        .collect();
    let high_vertices_nonnegative = negative_vertices.iter().all(|&(v, _)| g.degree(v) < 4);
    Ok(AuditReport {
        d_param,
        faces_nonnegative: negative_faces.is_empty(),
        totals,
        conserved,
        negative_vertices,
        negative_faces,
        high_vertices_nonnegative,
        discharge,
    })
}

pub(crate) fn check_conserved(expected: &Charge, ledger: &ChargeLedger) -> Result<()> {
    let total = ledger.total();
    if &total != expected {
        return Err(Error::ChargeNotConserved {
            phase: ledger.phase.to_string(),
            total: total.to_string(),
        });
    }
    Ok(())
}
