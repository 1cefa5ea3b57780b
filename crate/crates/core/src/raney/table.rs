use std::collections::VecDeque;
use std::fmt::Write as _;

use num_traits::Signed;
use serde::Serialize;

use super::{feed, BalanceClass, Config, Lr, LrRuns};
use crate::exact::{Integer, Mat2};
use crate::{Error, Result};

/// All doubly balanced nonnegative matrices of determinant `det`, sorted.
pub fn enumerate_states(det: u64) -> Result<Vec<Config>> {
    if det < 2 {
        return Err(Error::precondition("determinant must be at least 2"));
    }
    let target = Integer::from(det);
    let mut out = Vec::new();
    for a in 0..=det {
        for b in 0..=det {
            for c in 0..=det {
                for d in 0..=det {
                    let m = Mat2::new(a, b, c, d);
                    if m.det() == target && super::balanced_class(&m) == BalanceClass::Doubly {
                        out.push(Config(m));
                    }
                }
            }
        }
    }
    out.sort();
    Ok(out)
}

/// A transition: reading `input` from `from` emits `output` and lands in `to`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    pub from: Config,
    pub input: LrRuns,
    pub output: LrRuns,
    pub to: Config,
}

impl Edge {
    /// `from · product(input) = product(output) · to`.
    pub fn verify(&self) -> bool {
        self.from.matrix() * &self.input.product() == &self.output.product() * self.to.matrix()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransducerTable {
    pub det: u64,
    pub states: Vec<Config>,
    pub edges: Vec<Edge>,
}

#[derive(Serialize)]
struct JsonEdge {
    from: String,
    #[serde(rename = "in")]
    input: String,
    #[serde(rename = "out")]
    output: String,
    to: String,
}

#[derive(Serialize)]
struct JsonTable {
    det: u64,
    states: Vec<String>,
    edges: Vec<JsonEdge>,
}

impl TransducerTable {
    pub fn to_json(&self) -> String {
        let table = JsonTable {
            det: self.det,
            states: self.states.iter().map(|s| s.matrix().literal()).collect(),
            edges: self
                .edges
                .iter()
                .map(|e| JsonEdge {
                    from: e.from.matrix().literal(),
                    input: e.input.to_plain(),
                    output: e.output.to_plain(),
                    to: e.to.matrix().literal(),
                })
                .collect(),
        };
        serde_json::to_string(&table).expect("plain data")
    }

    /// Graphviz description, one line per edge.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph transducer {\n");
        for e in &self.edges {
            writeln!(
                out,
                "  \"{}\" -> \"{}\" [label=\"{}/{}\"];",
                e.from.matrix().literal(),
                e.to.matrix().literal(),
                e.input.to_plain(),
                e.output.to_plain()
            )
            .expect("writing to a String");
        }
        out.push_str("}\n");
        out
    }

    pub fn edges_from<'a>(&'a self, state: &'a Config) -> impl Iterator<Item = &'a Edge> + 'a {
        self.edges.iter().filter(move |e| &e.from == state)
    }
}

/// Explores input words from every state in length-lexicographic order
/// (`L < R`); a word becomes an edge as soon as the run returns to a doubly
/// balanced configuration, and is not extended further. A word still open at
/// length `max_input` is an error.
pub fn derive_table(det: u64, max_input: usize) -> Result<TransducerTable> {
    if max_input == 0 {
        return Err(Error::precondition("max_input must be at least 1"));
    }
    let states = enumerate_states(det)?;
    let mut edges = Vec::new();
    for state in &states {
        let mut queue = VecDeque::from([(LrRuns::new(), LrRuns::new(), state.clone())]);
        while let Some((input, output, config)) = queue.pop_front() {
            for x in [Lr::L, Lr::R] {
                let (emitted, next) = feed(&config, x)?;
                let mut input = input.clone();
                input.push(x);
                let mut output = output.clone();
                output.extend(&emitted);
                if next.is_state() {
                    if next.det().abs() != Integer::from(det) {
                        return Err(Error::invariant(format!(
                            "determinant drifted to {}",
                            next.det()
                        )));
                    }
                    let edge = Edge {
                        from: state.clone(),
                        input,
                        output,
                        to: next,
                    };
                    if !edge.verify() {
                        return Err(Error::invariant(format!(
                            "edge identity fails for {edge:?}"
                        )));
                    }
                    edges.push(edge);
                } else if input.len() >= Integer::from(max_input) {
                    return Err(Error::HorizonExceeded(format!(
                        "input {} from state {} is still pending at length {max_input}",
                        input.to_plain(),
                        state
                    )));
                } else {
                    queue.push_back((input, output, next));
                }
            }
        }
    }
    Ok(TransducerTable { det, states, edges })
}
