use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("an instance needs at least one vertex")]
    NoVertices,

    #[error("edge {edge} has endpoint {vertex}, but the instance has {vertex_count} vertices")]
    EndpointOutOfRange {
        edge: usize,
        vertex: usize,
        vertex_count: usize,
    },

    #[error("vertex {vertex} is out of range (instance has {vertex_count} vertices)")]
    VertexOutOfRange { vertex: usize, vertex_count: usize },

    #[error("edge id {edge} is out of range (instance has {edge_count} edges)")]
    EdgeOutOfRange { edge: usize, edge_count: usize },

    #[error("edge {edge} has a positive utility; only chores are supported")]
    PositiveUtility { edge: usize },

    #[error("self-loop {edge} must have the same utility at both ends")]
    AsymmetricSelfLoop { edge: usize },

    #[error(
        "edges {first} and {second} are parallel; multigraphs are only accepted by the oracle"
    )]
    ParallelEdges { first: usize, second: usize },

    #[error("edge {edge} is not objective (zero utility to exactly one endpoint)")]
    NonObjectiveEdge { edge: usize },

    #[error(
        "literal on variable {variable} is out of range (formula has {variable_count} variables)"
    )]
    LiteralOutOfRange {
        variable: usize,
        variable_count: usize,
    },

    #[error("clause text line {line}: {reason}")]
    ClauseSyntax { line: usize, reason: String },

    #[error("vertex {vertex} appears in more than one group")]
    OverlappingGroups { vertex: usize },

    #[error("the supplied edges do not connect the component")]
    DisconnectedComponent,

    #[error(
        "a component with {vertices} vertices and {edges} edges is neither a tree nor unicyclic"
    )]
    UnsupportedEdgeCount { vertices: usize, edges: usize },

    #[error("edge {edge} has an endpoint outside the component")]
    EdgeOutsideComponent { edge: usize },

    #[error("root {vertex} is not a vertex of the component")]
    RootOutsideComponent { vertex: usize },

    #[error("a root can only be chosen for a tree component")]
    RootOnUnicyclic,

    #[error("orientation has {found} entries but the instance has {expected} edges")]
    OrientationLength { found: usize, expected: usize },

    #[error("orientation entry {position} names edge {edge}; entries must follow edge-id order")]
    OrientationOrder { position: usize, edge: usize },

    #[error("orientation sends edge {edge} to vertex {vertex}, which is not one of its endpoints")]
    NotAnEndpoint { edge: usize, vertex: usize },

    #[error("allocation has {found} bundles for {expected} agents")]
    BundleCount { found: usize, expected: usize },

    #[error("edge {edge} is allocated more than once")]
    DuplicateAllocation { edge: usize },

    #[error("edge {edge} is not allocated")]
    UnallocatedEdge { edge: usize },

    #[error("{edges} non-loop edges exceed the enumeration limit of {limit}")]
    EnumerationLimit { edges: usize, limit: usize },

    #[error("a partition instance needs at least one value")]
    EmptyPartition,

    #[error("partition values must be positive")]
    NonPositivePartitionValue,

    #[error("partition values sum past the representable utility range")]
    PartitionOverflow,

    #[error("{len} partition values exceed the enumeration limit of {limit}")]
    PartitionTooLarge { len: usize, limit: usize },

    #[error("infeasible generator parameters: {0}")]
    InfeasibleParams(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
