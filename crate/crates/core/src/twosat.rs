//! 2-CNF satisfiability via the implication graph.
//!
//! Each clause `a ∨ b` contributes the implications `¬a → b` and `¬b → a`.
//! The formula is unsatisfiable exactly when some variable shares a strongly
//! connected component with its negation. Otherwise setting every literal
//! whose component comes later in topological order to true satisfies it.
//! Components come out of Tarjan's algorithm in reverse topological order,
//! so a variable is true when its positive literal has the smaller index.

use std::ops::Not;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Literal {
    variable: usize,
    negated: bool,
}

impl Literal {
    pub fn new(variable: usize, negated: bool) -> Self {
        Literal { variable, negated }
    }

    pub fn positive(variable: usize) -> Self {
        Literal::new(variable, false)
    }

    pub fn negative(variable: usize) -> Self {
        Literal::new(variable, true)
    }

    pub fn variable(self) -> usize {
        self.variable
    }

    pub fn is_negated(self) -> bool {
        self.negated
    }

    pub fn holds_under(self, values: &[bool]) -> bool {
        values[self.variable] != self.negated
    }

    fn node(self) -> usize {
        2 * self.variable + usize::from(self.negated)
    }
}

impl Not for Literal {
    type Output = Literal;

    fn not(self) -> Literal {
        Literal::new(self.variable, !self.negated)
    }
}

/// Conjunction of clauses with one or two literals. A unit clause `{a}` is
/// stored as `(a, a)`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TwoSatFormula {
    variable_count: usize,
    clauses: Vec<(Literal, Literal)>,
}

impl TwoSatFormula {
    pub fn new(variable_count: usize) -> Self {
        TwoSatFormula {
            variable_count,
            clauses: Vec::new(),
        }
    }

    pub fn with_capacity(variable_count: usize, clauses: usize) -> Self {
        TwoSatFormula {
            variable_count,
            clauses: Vec::with_capacity(clauses),
        }
    }

    pub fn variable_count(&self) -> usize {
        self.variable_count
    }

    pub fn clauses(&self) -> &[(Literal, Literal)] {
        &self.clauses
    }

    pub fn clause_count(&self) -> usize {
        self.clauses.len()
    }

    fn check(&self, literal: Literal) -> Result<()> {
        if literal.variable < self.variable_count {
            Ok(())
        } else {
            Err(Error::LiteralOutOfRange {
                variable: literal.variable,
                variable_count: self.variable_count,
            })
        }
    }

    pub fn add_clause(&mut self, a: Literal, b: Literal) -> Result<()> {
        self.check(a)?;
        self.check(b)?;
        self.clauses.push((a, b));
        Ok(())
    }

    pub fn add_unit(&mut self, a: Literal) -> Result<()> {
        self.add_clause(a, a)
    }

    /// Direct scan of every clause.
    pub fn is_satisfied_by(&self, values: &[bool]) -> bool {
        values.len() == self.variable_count
            && self
                .clauses
                .iter()
                .all(|&(a, b)| a.holds_under(values) || b.holds_under(values))
    }

    /// Returns a satisfying assignment, or `None` when none exists.
    /// Linear in variables plus clauses.
    pub fn solve(&self) -> Option<Assignment> {
        let graph = self.implication_graph();
        let component = tarjan(&graph);
        let mut values = Vec::with_capacity(self.variable_count);
        for variable in 0..self.variable_count {
            let pos = component[Literal::positive(variable).node()];
            let neg = component[Literal::negative(variable).node()];
            if pos == neg {
                return None;
            }
            values.push(pos < neg);
        }
        Some(Assignment { values })
    }

    fn implication_graph(&self) -> Csr {
        let nodes = 2 * self.variable_count;
        let mut offsets = vec![0u32; nodes + 1];
        let implications = |&(a, b): &(Literal, Literal)| {
            let first = ((!a).node(), b.node());
            let second = ((!b).node(), a.node());
            std::iter::once(first).chain((a != b).then_some(second))
        };
        for (from, _) in self.clauses.iter().flat_map(implications) {
            offsets[from + 1] += 1;
        }
        for i in 0..nodes {
            offsets[i + 1] += offsets[i];
        }
        let mut fill = offsets.clone();
        let mut targets = vec![0u32; offsets[nodes] as usize];
        for (from, to) in self.clauses.iter().flat_map(implications) {
            targets[fill[from] as usize] = to as u32;
            fill[from] += 1;
        }
        Csr { offsets, targets }
    }

    /// Parses clauses written one per line as signed 1-based variable
    /// indices, e.g. `1 -2` or `3`. A trailing `0` is ignored, as are blank
    /// lines, `c` comment lines and a `p cnf <vars> <clauses>` header. Without
    /// a header the variable count is the largest index mentioned.
    pub fn from_dimacs(text: &str) -> Result<Self> {
        let mut declared: Option<usize> = None;
        let mut clauses = Vec::new();
        let mut largest = 0usize;
        for (index, raw) in text.lines().enumerate() {
            let line = index + 1;
            let trimmed = raw.trim();
            if trimmed.is_empty() || trimmed.starts_with('c') {
                continue;
            }
            let syntax = |reason: &str| Error::ClauseSyntax {
                line,
                reason: reason.to_string(),
            };
            if let Some(header) = trimmed.strip_prefix('p') {
                let fields: Vec<&str> = header.split_whitespace().collect();
                match fields.as_slice() {
                    ["cnf", vars, _] => {
                        declared = Some(vars.parse().map_err(|_| syntax("bad variable count"))?)
                    }
                    _ => return Err(syntax("expected `p cnf <vars> <clauses>`")),
                }
                continue;
            }
            let mut literals = Vec::with_capacity(2);
            for token in trimmed.split_whitespace() {
                let value: i64 = token.parse().map_err(|_| syntax("not an integer"))?;
                if value == 0 {
                    break;
                }
                let variable = value.unsigned_abs() as usize - 1;
                largest = largest.max(variable + 1);
                literals.push(Literal::new(variable, value < 0));
            }
            match literals.as_slice() {
                [a] => clauses.push((*a, *a)),
                [a, b] => clauses.push((*a, *b)),
                [] => return Err(syntax("empty clause")),
                _ => return Err(syntax("more than two literals")),
            }
        }
        let mut formula = TwoSatFormula::new(declared.unwrap_or(largest));
        for (a, b) in clauses {
            formula.add_clause(a, b)?;
        }
        Ok(formula)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Assignment {
    values: Vec<bool>,
}

impl Assignment {
    pub fn value(&self, variable: usize) -> bool {
        self.values[variable]
    }

    pub fn values(&self) -> &[bool] {
        &self.values
    }

    pub fn into_values(self) -> Vec<bool> {
        self.values
    }
}

struct Csr {
    offsets: Vec<u32>,
    targets: Vec<u32>,
}

impl Csr {
    fn node_count(&self) -> usize {
        self.offsets.len() - 1
    }
}

/// Iterative Tarjan. Returns the component index of each node; indices are
/// assigned in the order components complete, i.e. reverse topological.
fn tarjan(graph: &Csr) -> Vec<u32> {
    const UNVISITED: u32 = u32::MAX;
    let n = graph.node_count();
    let mut order = vec![UNVISITED; n];
    let mut low = vec![0u32; n];
    let mut component = vec![UNVISITED; n];
    let mut on_stack = vec![false; n];
    let mut stack: Vec<u32> = Vec::new();
    let mut calls: Vec<(u32, u32)> = Vec::new();
    let mut counter = 0u32;
    let mut components = 0u32;

    for root in 0..n as u32 {
        if order[root as usize] != UNVISITED {
            continue;
        }
        order[root as usize] = counter;
        low[root as usize] = counter;
        counter += 1;
        stack.push(root);
        on_stack[root as usize] = true;
        calls.push((root, graph.offsets[root as usize]));

        while let Some(frame) = calls.last_mut() {
            let v = frame.0 as usize;
            if frame.1 < graph.offsets[v + 1] {
                let w = graph.targets[frame.1 as usize];
                frame.1 += 1;
                let wi = w as usize;
                if order[wi] == UNVISITED {
                    order[wi] = counter;
                    low[wi] = counter;
                    counter += 1;
                    stack.push(w);
                    on_stack[wi] = true;
                    calls.push((w, graph.offsets[wi]));
                } else if on_stack[wi] {
                    low[v] = low[v].min(order[wi]);
                }
                continue;
            }

            calls.pop();
            if let Some(&(parent, _)) = calls.last() {
                let p = parent as usize;
                low[p] = low[p].min(low[v]);
            }
            if low[v] == order[v] {
                loop {
                    let w = stack.pop().expect("tarjan stack underflow") as usize;
                    on_stack[w] = false;
                    component[w] = components;
                    if w == v {
                        break;
                    }
                }
                components += 1;
            }
        }
    }
    component
}
