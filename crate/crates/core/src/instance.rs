//! Chore instances, orientations and the structural views the solvers work on.
//!
//! An instance is a graph whose vertices are agents and whose edges are
//! chores. Every edge carries one non-positive utility per endpoint; an edge
//! is worth nothing to an agent it is not incident to. Self-loops are allowed
//! and parallel edges only when the instance opts in with `allow_multi`.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Dense vertex index, `0..vertex_count`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexId(pub usize);

impl VertexId {
    pub fn index(self) -> usize {
        self.0
    }
}

impl From<usize> for VertexId {
    fn from(index: usize) -> Self {
        VertexId(index)
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A chore between `u` and `v` (`u == v` for a self-loop).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Edge {
    pub u: VertexId,
    pub v: VertexId,
    pub util_u: i64,
    pub util_v: i64,
}

impl Edge {
    pub fn new(u: usize, v: usize, util_u: i64, util_v: i64) -> Self {
        Edge {
            u: VertexId(u),
            v: VertexId(v),
            util_u,
            util_v,
        }
    }

    /// Same utility to both endpoints.
    pub fn weighted(u: usize, v: usize, weight: i64) -> Self {
        Edge::new(u, v, weight, weight)
    }

    pub fn self_loop(v: usize, util: i64) -> Self {
        Edge::new(v, v, util, util)
    }

    pub fn is_self_loop(&self) -> bool {
        self.u == self.v
    }

    pub fn is_incident(&self, agent: VertexId) -> bool {
        self.u == agent || self.v == agent
    }

    /// Marginal utility of this edge to `agent`; zero when not incident.
    pub fn utility_to(&self, agent: VertexId) -> i64 {
        if agent == self.u {
            self.util_u
        } else if agent == self.v {
            self.util_v
        } else {
            0
        }
    }

    /// The endpoint opposite `agent` (itself for a self-loop).
    pub fn opposite(&self, agent: VertexId) -> VertexId {
        if agent == self.u {
            self.v
        } else {
            self.u
        }
    }

    pub fn class(&self) -> EdgeClass {
        match (self.util_u == 0, self.util_v == 0) {
            (true, true) => EdgeClass::Dummy,
            (false, false) => EdgeClass::Negative,
            _ => EdgeClass::NonObjective,
        }
    }

    fn unordered_pair(&self) -> (usize, usize) {
        let (a, b) = (self.u.0, self.v.0);
        if a <= b {
            (a, b)
        } else {
            (b, a)
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EdgeClass {
    /// Zero utility to both endpoints.
    Dummy,
    /// Negative utility to both endpoints.
    Negative,
    /// Zero to exactly one endpoint.
    NonObjective,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
struct InstanceFile {
    vertex_count: usize,
    edges: Vec<Edge>,
    #[serde(default)]
    allow_multi: bool,
}

/// A validated graph of chores. Edge ids are positions in [`edges`](Self::edges).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "InstanceFile", into = "InstanceFile")]
pub struct ChoreInstance {
    vertex_count: usize,
    edges: Vec<Edge>,
    allow_multi: bool,
}

impl TryFrom<InstanceFile> for ChoreInstance {
    type Error = Error;

    fn try_from(file: InstanceFile) -> Result<Self> {
        ChoreInstance::new(file.vertex_count, file.edges, file.allow_multi)
    }
}

impl From<ChoreInstance> for InstanceFile {
    fn from(instance: ChoreInstance) -> Self {
        InstanceFile {
            vertex_count: instance.vertex_count,
            edges: instance.edges,
            allow_multi: instance.allow_multi,
        }
    }
}

impl ChoreInstance {
    pub fn new(vertex_count: usize, edges: Vec<Edge>, allow_multi: bool) -> Result<Self> {
        if vertex_count == 0 {
            return Err(Error::NoVertices);
        }
        for (id, edge) in edges.iter().enumerate() {
            for end in [edge.u, edge.v] {
                if end.0 >= vertex_count {
                    return Err(Error::EndpointOutOfRange {
                        edge: id,
                        vertex: end.0,
                        vertex_count,
                    });
                }
            }
            if edge.util_u > 0 || edge.util_v > 0 {
                return Err(Error::PositiveUtility { edge: id });
            }
            if edge.is_self_loop() && edge.util_u != edge.util_v {
                return Err(Error::AsymmetricSelfLoop { edge: id });
            }
        }
        let instance = ChoreInstance {
            vertex_count,
            edges,
            allow_multi,
        };
        if !allow_multi {
            if let Some((first, second)) = instance.parallel_pair() {
                return Err(Error::ParallelEdges { first, second });
            }
        }
        Ok(instance)
    }

    /// Simple graph (no parallel edges, at most one self-loop per vertex).
    pub fn simple(vertex_count: usize, edges: Vec<Edge>) -> Result<Self> {
        Self::new(vertex_count, edges, false)
    }

    pub fn multigraph(vertex_count: usize, edges: Vec<Edge>) -> Result<Self> {
        Self::new(vertex_count, edges, true)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("instance serialization cannot fail")
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn allow_multi(&self) -> bool {
        self.allow_multi
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> {
        (0..self.vertex_count).map(VertexId)
    }

    pub fn edge(&self, id: usize) -> Result<&Edge> {
        self.edges.get(id).ok_or(Error::EdgeOutOfRange {
            edge: id,
            edge_count: self.edges.len(),
        })
    }

    pub fn check_vertex(&self, vertex: VertexId) -> Result<()> {
        if vertex.0 < self.vertex_count {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: vertex.0,
                vertex_count: self.vertex_count,
            })
        }
    }

    pub fn classify_edge(&self, id: usize) -> Result<EdgeClass> {
        Ok(self.edge(id)?.class())
    }

    /// First pair of edges sharing an unordered endpoint pair, if any.
    pub fn parallel_pair(&self) -> Option<(usize, usize)> {
        let mut seen: HashMap<(usize, usize), usize> = HashMap::with_capacity(self.edges.len());
        for (id, edge) in self.edges.iter().enumerate() {
            if let Some(&first) = seen.get(&edge.unordered_pair()) {
                return Some((first, id));
            }
            seen.insert(edge.unordered_pair(), id);
        }
        None
    }

    /// Errors unless the edge list is free of parallel edges. An instance
    /// flagged `allow_multi` whose edges happen to be simple is accepted.
    pub fn require_simple(&self) -> Result<()> {
        if !self.allow_multi {
            return Ok(());
        }
        match self.parallel_pair() {
            Some((first, second)) => Err(Error::ParallelEdges { first, second }),
            None => Ok(()),
        }
    }

    pub fn is_objective(&self) -> bool {
        self.edges
            .iter()
            .all(|e| e.class() != EdgeClass::NonObjective)
    }

    pub fn require_objective(&self) -> Result<()> {
        match self
            .edges
            .iter()
            .position(|e| e.class() == EdgeClass::NonObjective)
        {
            Some(edge) => Err(Error::NonObjectiveEdge { edge }),
            None => Ok(()),
        }
    }

    /// Additive utility of `bundle` to `agent`. Non-incident edges add zero.
    ///
    /// Panics if a bundle entry is not an edge id of this instance.
    pub fn bundle_utility(&self, agent: VertexId, bundle: &[usize]) -> i128 {
        bundle
            .iter()
            .map(|&e| i128::from(self.edges[e].utility_to(agent)))
            .sum()
    }

    pub fn negative_components(&self) -> NegativeComponentReport {
        let parts = components_where(self, |e| e.class() == EdgeClass::Negative);
        NegativeComponentReport {
            component_of: parts.component_of,
            components: parts
                .vertices
                .into_iter()
                .zip(parts.edges)
                .map(|(vertices, edges)| Component { vertices, edges })
                .collect(),
        }
    }

    /// Replaces every non-objective edge `{i, j}` (zero to `i`, `β` to `j`) by a
    /// fresh vertex `k`, a dummy edge `{i, k}` and a negative edge `{j, k}` of
    /// weight `β`. The dummy half keeps the source edge id; the negative half
    /// is appended.
    pub fn subdivide(&self) -> Result<SubdivisionMap> {
        self.require_simple()?;
        let mut edges = self.edges.clone();
        let mut origin: Vec<EdgeOrigin> = (0..self.edges.len()).map(EdgeOrigin::Original).collect();
        let mut splits = Vec::new();
        let mut next_vertex = self.vertex_count;

        for (id, edge) in self.edges.iter().enumerate() {
            if edge.class() != EdgeClass::NonObjective {
                continue;
            }
            let (zero_end, negative_end, beta) = if edge.util_u == 0 {
                (edge.u, edge.v, edge.util_v)
            } else {
                (edge.v, edge.u, edge.util_u)
            };
            let fake = VertexId(next_vertex);
            next_vertex += 1;

            edges[id] = Edge {
                u: zero_end,
                v: fake,
                util_u: 0,
                util_v: 0,
            };
            let negative_side = edges.len();
            edges.push(Edge {
                u: negative_end,
                v: fake,
                util_u: beta,
                util_v: beta,
            });
            origin[id] = EdgeOrigin::Split {
                source: id,
                side: SplitSide::Zero,
            };
            origin.push(EdgeOrigin::Split {
                source: id,
                side: SplitSide::Negative,
            });
            splits.push(Split {
                source: id,
                zero_end,
                negative_end,
                fake,
                zero_side: id,
                negative_side,
            });
        }

        let objective = ChoreInstance::new(next_vertex, edges, false)?;
        Ok(SubdivisionMap {
            source_vertex_count: self.vertex_count,
            source_edge_count: self.edges.len(),
            objective,
            origin,
            splits,
        })
    }

    /// Checks that `orientation` matches this instance edge for edge.
    pub fn check_orientation(&self, orientation: &Orientation) -> Result<()> {
        if orientation.len() != self.edges.len() {
            return Err(Error::OrientationLength {
                found: orientation.len(),
                expected: self.edges.len(),
            });
        }
        for (id, (edge, &to)) in self.edges.iter().zip(orientation.receivers()).enumerate() {
            if !edge.is_incident(to) {
                return Err(Error::NotAnEndpoint {
                    edge: id,
                    vertex: to.0,
                });
            }
        }
        Ok(())
    }
}

/// Assignment of every edge to one of its endpoints.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<OrientationEntry>", into = "Vec<OrientationEntry>")]
pub struct Orientation {
    receiver: Vec<VertexId>,
}

/// One line of the orientation file: edge `edge` goes to vertex `to`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrientationEntry {
    pub edge: usize,
    pub to: VertexId,
}

impl TryFrom<Vec<OrientationEntry>> for Orientation {
    type Error = Error;

    fn try_from(entries: Vec<OrientationEntry>) -> Result<Self> {
        let mut receiver = Vec::with_capacity(entries.len());
        for (position, entry) in entries.into_iter().enumerate() {
            if entry.edge != position {
                return Err(Error::OrientationOrder {
                    position,
                    edge: entry.edge,
                });
            }
            receiver.push(entry.to);
        }
        Ok(Orientation { receiver })
    }
}

impl From<Orientation> for Vec<OrientationEntry> {
    fn from(orientation: Orientation) -> Self {
        orientation
            .receiver
            .into_iter()
            .enumerate()
            .map(|(edge, to)| OrientationEntry { edge, to })
            .collect()
    }
}

impl Orientation {
    /// Validated against `instance`.
    pub fn new(instance: &ChoreInstance, receiver: Vec<VertexId>) -> Result<Self> {
        let orientation = Orientation { receiver };
        instance.check_orientation(&orientation)?;
        Ok(orientation)
    }

    /// Unvalidated; pair with [`ChoreInstance::check_orientation`].
    pub fn from_receivers(receiver: Vec<VertexId>) -> Self {
        Orientation { receiver }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("orientation serialization cannot fail")
    }

    pub fn receiver(&self, edge: usize) -> VertexId {
        self.receiver[edge]
    }

    pub fn receivers(&self) -> &[VertexId] {
        &self.receiver
    }

    pub fn len(&self) -> usize {
        self.receiver.len()
    }

    pub fn is_empty(&self) -> bool {
        self.receiver.is_empty()
    }

    pub fn in_degrees(&self, vertex_count: usize) -> Vec<usize> {
        let mut degree = vec![0; vertex_count];
        for to in &self.receiver {
            degree[to.0] += 1;
        }
        degree
    }

    /// Edge ids received by each vertex.
    pub fn bundles(&self, vertex_count: usize) -> Vec<Vec<usize>> {
        let mut bundles = vec![Vec::new(); vertex_count];
        for (edge, to) in self.receiver.iter().enumerate() {
            bundles[to.0].push(edge);
        }
        bundles
    }
}

/// A vertex set connected through negative edges, with the negative edges
/// whose endpoints both lie inside it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    /// Sorted ascending.
    pub vertices: Vec<VertexId>,
    pub edges: Vec<usize>,
}

impl Component {
    pub fn size(&self) -> usize {
        self.vertices.len()
    }

    pub fn negative_edge_count(&self) -> usize {
        self.edges.len()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NegativeComponentReport {
    pub component_of: Vec<usize>,
    pub components: Vec<Component>,
}

impl NegativeComponentReport {
    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SplitSide {
    /// `{i, k}`, utility `(0, 0)`.
    Zero,
    /// `{j, k}`, utility `(β, β)`.
    Negative,
}

/// Where an edge of the objective instance came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EdgeOrigin {
    Original(usize),
    Split { source: usize, side: SplitSide },
}

/// Bookkeeping for one subdivided edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Split {
    pub source: usize,
    /// Endpoint that values the source edge at zero.
    pub zero_end: VertexId,
    pub negative_end: VertexId,
    pub fake: VertexId,
    pub zero_side: usize,
    pub negative_side: usize,
}

/// The objective instance produced by [`ChoreInstance::subdivide`] together
/// with the mapping back to the source instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubdivisionMap {
    source_vertex_count: usize,
    source_edge_count: usize,
    pub objective: ChoreInstance,
    pub origin: Vec<EdgeOrigin>,
    pub splits: Vec<Split>,
}

impl SubdivisionMap {
    /// Fake vertices occupy the ids after the source vertices.
    pub fn fake_vertices(&self) -> impl Iterator<Item = VertexId> {
        (self.source_vertex_count..self.objective.vertex_count()).map(VertexId)
    }

    pub fn is_fake(&self, vertex: VertexId) -> bool {
        vertex.0 >= self.source_vertex_count
    }

    /// Orients each source edge like the objective orientation orients the
    /// part of it at the zero-utility endpoint: a split edge goes to `i` when
    /// `{i, k}` goes to `i` and to `j` otherwise.
    pub fn lift(&self, objective_orientation: &Orientation) -> Result<Orientation> {
        self.objective.check_orientation(objective_orientation)?;
        let mut receiver = objective_orientation.receivers()[..self.source_edge_count].to_vec();
        for split in &self.splits {
            receiver[split.source] =
                if objective_orientation.receiver(split.zero_side) == split.zero_end {
                    split.zero_end
                } else {
                    split.negative_end
                };
        }
        Ok(Orientation { receiver })
    }

    /// Pushes a source orientation into the objective instance, sending both
    /// halves of a split edge the same way so the fake vertex receives exactly one.
    pub fn lower(&self, source_orientation: &Orientation) -> Result<Orientation> {
        if source_orientation.len() != self.source_edge_count {
            return Err(Error::OrientationLength {
                found: source_orientation.len(),
                expected: self.source_edge_count,
            });
        }
        let mut receiver = source_orientation.receivers().to_vec();
        receiver.resize(self.objective.edge_count(), VertexId(0));
        for split in &self.splits {
            if source_orientation.receiver(split.source) == split.zero_end {
                receiver[split.zero_side] = split.zero_end;
                receiver[split.negative_side] = split.fake;
            } else {
                receiver[split.zero_side] = split.fake;
                receiver[split.negative_side] = split.negative_end;
            }
        }
        Ok(Orientation { receiver })
    }
}

pub(crate) struct EdgeComponents {
    pub component_of: Vec<usize>,
    pub vertices: Vec<Vec<VertexId>>,
    pub edges: Vec<Vec<usize>>,
}

/// Connected components of the subgraph spanned by the edges passing `keep`,
/// over all vertices. Components are numbered by smallest vertex.
pub(crate) fn components_where(
    instance: &ChoreInstance,
    keep: impl Fn(&Edge) -> bool,
) -> EdgeComponents {
    let n = instance.vertex_count();
    let kept: Vec<usize> = (0..instance.edge_count())
        .filter(|&e| keep(&instance.edges[e]))
        .collect();

    let mut offsets = vec![0usize; n + 1];
    for &e in &kept {
        let edge = &instance.edges[e];
        if !edge.is_self_loop() {
            offsets[edge.u.0 + 1] += 1;
            offsets[edge.v.0 + 1] += 1;
        }
    }
    for i in 0..n {
        offsets[i + 1] += offsets[i];
    }
    let mut fill = offsets.clone();
    let mut neighbours = vec![0usize; offsets[n]];
    for &e in &kept {
        let edge = &instance.edges[e];
        if !edge.is_self_loop() {
            neighbours[fill[edge.u.0]] = edge.v.0;
            fill[edge.u.0] += 1;
            neighbours[fill[edge.v.0]] = edge.u.0;
            fill[edge.v.0] += 1;
        }
    }

    const UNSEEN: usize = usize::MAX;
    let mut component_of = vec![UNSEEN; n];
    let mut vertices = Vec::new();
    let mut queue = VecDeque::new();
    for start in 0..n {
        if component_of[start] != UNSEEN {
            continue;
        }
        let id = vertices.len();
        let mut members = vec![VertexId(start)];
        component_of[start] = id;
        queue.push_back(start);
        while let Some(x) = queue.pop_front() {
            for &y in &neighbours[offsets[x]..offsets[x + 1]] {
                if component_of[y] == UNSEEN {
                    component_of[y] = id;
                    members.push(VertexId(y));
                    queue.push_back(y);
                }
            }
        }
        members.sort_unstable();
        vertices.push(members);
    }

    let mut edges = vec![Vec::new(); vertices.len()];
    for &e in &kept {
        edges[component_of[instance.edges[e].u.0]].push(e);
    }
    EdgeComponents {
        component_of,
        vertices,
        edges,
    }
}
