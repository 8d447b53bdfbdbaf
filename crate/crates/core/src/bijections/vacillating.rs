//! Vacillating tableaux and their bijection with tangled diagrams.
//!
//! Vertex `j` owns the half-steps `2j - 1` and `2j`. After inflation every
//! arc end gets a time: the unprimed label of a degree-2 vertex sits at
//! `2j - 1` and its primed label at `2j`; a degree-1 vertex closes arcs at
//! `2j - 1` and opens them at `2j`. The times respect the inflated order.
//!
//! Diagram to tableau runs right to left: a closing end row-inserts the
//! opening time of its arc, an opening end deletes itself (it is the
//! maximum entry). Tableau to diagram runs left to right: an added square
//! receives the current time, a removed square reverse-bumps out the opening
//! time of the arc that closes here. The rows of each tableau grow exactly
//! with the number of mutually crossing open arcs.

use std::fmt;

use thiserror::Error;

use super::tableau::{Shape, ShapeStep, StandardTableau};
use crate::diagram::{InflatedMatching, Label, TangledDiagram, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VacillatingError {
    #[error("shape sequence has even length {0}")]
    EvenLength(usize),
    #[error("sequence must start at the empty shape")]
    NonEmptyStart,
    #[error("shapes {0} and {1} differ by more than one square")]
    NotAdjacent(usize, usize),
    #[error("half-step pair at vertex {0} is not admitted")]
    BadPair(usize),
    #[error("shape sequence is not realizable: {0}")]
    Inconsistent(String),
}

/// The admitted pairs: (stay, stay), (remove, stay), (stay, add), and any
/// add/remove combination.
pub fn admitted_pair(odd: ShapeStep, even: ShapeStep) -> bool {
    !matches!(
        (odd, even),
        (ShapeStep::Add(_), ShapeStep::Stay) | (ShapeStep::Stay, ShapeStep::Remove(_))
    )
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VacillatingTableau {
    shapes: Vec<Shape>,
}

impl VacillatingTableau {
    pub fn new(shapes: Vec<Shape>) -> Result<Self, VacillatingError> {
        if shapes.len() % 2 == 0 {
            return Err(VacillatingError::EvenLength(shapes.len()));
        }
        if !shapes[0].is_empty() {
            return Err(VacillatingError::NonEmptyStart);
        }
        let steps: Vec<ShapeStep> = shapes
            .windows(2)
            .enumerate()
            .map(|(i, w)| w[0].difference(&w[1]).ok_or(VacillatingError::NotAdjacent(i, i + 1)))
            .collect::<Result<_, _>>()?;
        for (v, pair) in steps.chunks(2).enumerate() {
            if !admitted_pair(pair[0], pair[1]) {
                return Err(VacillatingError::BadPair(v + 1));
            }
        }
        Ok(VacillatingTableau { shapes })
    }

    pub fn shapes(&self) -> &[Shape] {
        &self.shapes
    }

    /// Number of vertices, i.e. half the number of steps.
    pub fn len(&self) -> usize {
        (self.shapes.len() - 1) / 2
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn max_rows(&self) -> usize {
        self.shapes.iter().map(Shape::row_count).max().unwrap_or(0)
    }

    pub fn final_shape(&self) -> &Shape {
        self.shapes.last().expect("at least the initial shape")
    }

    pub fn step_pairs(&self) -> Vec<(ShapeStep, ShapeStep)> {
        let steps: Vec<ShapeStep> = self
            .shapes
            .windows(2)
            .map(|w| w[0].difference(&w[1]).expect("validated"))
            .collect();
        steps.chunks(2).map(|p| (p[0], p[1])).collect()
    }
}

impl fmt::Display for VacillatingTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.shapes.iter().map(|s| s.to_string()).collect();
        f.write_str(&parts.join(" "))
    }
}

fn time_of(d: &TangledDiagram, label: Label, opens: bool) -> u32 {
    let v = label.vertex;
    if label.primed || (d.degree(v) == 1 && opens) {
        2 * v
    } else {
        2 * v - 1
    }
}

pub fn diagram_to_tableau(d: &TangledDiagram) -> VacillatingTableau {
    let steps = 2 * d.n() as usize;
    let mut closes: Vec<Option<u32>> = vec![None; steps + 1];
    let mut opens = vec![false; steps + 1];
    for &(a, b) in d.inflate().arcs() {
        let (s, t) = (time_of(d, a, true), time_of(d, b, false));
        opens[s as usize] = true;
        closes[t as usize] = Some(s);
    }

    let mut shapes = vec![Shape::empty(); steps + 1];
    let mut tableau = StandardTableau::new();
    for t in (1..=steps).rev() {
        if let Some(s) = closes[t] {
            tableau.insert(s).expect("opening times are distinct");
        } else if opens[t] {
            tableau
                .remove_max(t as u32)
                .expect("an opening time is the largest open entry");
        }
        shapes[t - 1] = tableau.shape();
    }
    VacillatingTableau::new(shapes).expect("diagram yields an admitted sequence")
}

pub fn tableau_to_diagram(vt: &VacillatingTableau) -> Result<TangledDiagram, VacillatingError> {
    let n = vt.len() as Vertex;
    if n == 0 {
        return Err(VacillatingError::Inconsistent("a diagram needs at least one vertex".into()));
    }
    if !vt.final_shape().is_empty() {
        return Err(VacillatingError::Inconsistent("sequence does not return to the empty shape".into()));
    }
    let mut tableau = StandardTableau::new();
    let mut used = vec![false; 2 * n as usize + 1];
    let mut timed_arcs = Vec::new();
    for (idx, w) in vt.shapes.windows(2).enumerate() {
        let t = idx as u32 + 1;
        match w[0].difference(&w[1]).expect("validated") {
            ShapeStep::Stay => {}
            ShapeStep::Add(r) => {
                tableau
                    .place_max(r, t)
                    .ok_or_else(|| VacillatingError::Inconsistent(format!("cannot add in row {r}")))?;
                used[t as usize] = true;
            }
            ShapeStep::Remove(r) => {
                let s = tableau
                    .remove_corner(r)
                    .map_err(|e| VacillatingError::Inconsistent(e.to_string()))?;
                used[t as usize] = true;
                timed_arcs.push((s, t));
            }
        }
    }

    let split: Vec<Vertex> = (1..=n)
        .filter(|&v| used[2 * v as usize - 1] && used[2 * v as usize])
        .collect();
    let label = |t: u32| {
        let v = t.div_ceil(2);
        if t % 2 == 0 && split.contains(&v) {
            Label::primed(v)
        } else {
            Label::plain(v)
        }
    };
    let arcs: Vec<(Label, Label)> = timed_arcs.iter().map(|&(s, t)| (label(s), label(t))).collect();
    InflatedMatching::new(n, split.iter().copied(), arcs)
        .and_then(|m| m.deflate())
        .map_err(|e| VacillatingError::Inconsistent(e.to_string()))
}
