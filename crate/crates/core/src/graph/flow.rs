//! Electrical flows and effective resistance.
//!
//! The unit electrical flow from `s` to `t` minimizes `sum_e p_e^2 / w_e`
//! over unit flows; the minimum is the effective resistance `R_{s,t}`. The
//! flow is recovered from vertex potentials: the weighted Laplacian system
//! is solved on the connected component of `s` with the sink grounded,
//! which handles the all-ones kernel of the Laplacian exactly and keeps the
//! solve a plain Cholesky factorization.

use nalgebra::{DMatrix, DVector};

use super::{BipartiteGraph, EdgeId};
use crate::error::Error;
use crate::Result;

/// A flow on the base edges, signed along the stored `A -> B` orientation.
#[derive(Clone, Debug)]
pub struct Flow {
    values: Vec<f64>,
    source: String,
    sink: String,
    value: f64,
}

impl Flow {
    /// Flow on one edge, positive in the `A -> B` direction.
    pub fn on(&self, e: EdgeId) -> f64 {
        self.values[e]
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn source(&self) -> &str {
        &self.source
    }

    pub fn sink(&self) -> &str {
        &self.sink
    }

    pub fn value(&self) -> f64 {
        self.value
    }

    /// The flow energy `sum_e p_e^2 / w_e`.
    pub fn energy(&self, g: &BipartiteGraph) -> f64 {
        self.values
            .iter()
            .enumerate()
            .map(|(e, p)| p * p / g.weight(e))
            .sum()
    }

    /// Net outflow at a vertex: positive when flow leaves it.
    pub fn net_outflow(&self, g: &BipartiteGraph, vertex: &str) -> Result<f64> {
        let v = g
            .global_id(vertex)
            .ok_or_else(|| Error::UnknownVertex(vertex.to_string()))?;
        let mut net = 0.0;
        for &e in g.global_incident(v) {
            let (a, _) = g.global_endpoints(e);
            // Positive flow leaves the A endpoint and enters the B endpoint.
            if a == v {
                net += self.values[e];
            } else {
                net -= self.values[e];
            }
        }
        Ok(net)
    }
}

impl BipartiteGraph {
    /// The unit electrical flow from `s` to `t` and the effective
    /// resistance `R_{s,t}`, over the base edges only.
    pub fn electric_flow(&self, s: &str, t: &str) -> Result<(Flow, f64)> {
        let s_id = self
            .global_id(s)
            .ok_or_else(|| Error::UnknownVertex(s.to_string()))?;
        let t_id = self
            .global_id(t)
            .ok_or_else(|| Error::UnknownVertex(t.to_string()))?;
        if s_id == t_id {
            return Err(Error::domain("source and sink coincide".to_string()));
        }

        // Connected component of s.
        let n = self.vertex_count();
        let mut reached = vec![false; n];
        reached[s_id] = true;
        let mut stack = vec![s_id];
        while let Some(v) = stack.pop() {
            for &e in self.global_incident(v) {
                let (a, b) = self.global_endpoints(e);
                let other = if a == v { b } else { a };
                if !reached[other] {
                    reached[other] = true;
                    stack.push(other);
                }
            }
        }
        if !reached[t_id] {
            return Err(Error::Disconnected(s.to_string(), t.to_string()));
        }

        // Grounded Laplacian over the component, sink removed.
        let mut local = vec![usize::MAX; n];
        let mut count = 0;
        for v in 0..n {
            if reached[v] && v != t_id {
                local[v] = count;
                count += 1;
            }
        }
        let mut lap = DMatrix::<f64>::zeros(count, count);
        for e in 0..self.edge_count() {
            let (a, b) = self.global_endpoints(e);
            if !reached[a] {
                continue;
            }
            let w = self.weight(e);
            let (la, lb) = (local[a], local[b]);
            if la != usize::MAX {
                lap[(la, la)] += w;
            }
            if lb != usize::MAX {
                lap[(lb, lb)] += w;
            }
            if la != usize::MAX && lb != usize::MAX {
                lap[(la, lb)] -= w;
                lap[(lb, la)] -= w;
            }
        }
        let mut rhs = DVector::<f64>::zeros(count);
        rhs[local[s_id]] = 1.0;
        let chol = lap.cholesky().ok_or(Error::NumericalFailure {
            residual: f64::NAN,
            tolerance: 0.0,
        })?;
        let potentials = chol.solve(&rhs);

        let phi = |v: usize| -> f64 {
            if v == t_id || !reached[v] {
                0.0
            } else {
                potentials[local[v]]
            }
        };
        let values: Vec<f64> = (0..self.edge_count())
            .map(|e| {
                let (a, b) = self.global_endpoints(e);
                if reached[a] {
                    self.weight(e) * (phi(a) - phi(b))
                } else {
                    0.0
                }
            })
            .collect();
        let resistance = phi(s_id);
        Ok((
            Flow {
                values,
                source: s.to_string(),
                sink: t.to_string(),
                value: 1.0,
            },
            resistance,
        ))
    }
}
