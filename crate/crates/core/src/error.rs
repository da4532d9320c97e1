use thiserror::Error;

use crate::matroid::Element;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("basis family is empty")]
    EmptyFamily,
    #[error("basis {basis:?} has {found} elements, expected rank {rank}")]
    RankMismatch {
        basis: Vec<Element>,
        rank: usize,
        found: usize,
    },
    #[error("basis {0:?} contains a repeated element")]
    RepeatedElement(Vec<Element>),
    #[error("element {element} is outside the ground set of size {ground_size}")]
    ElementOutOfRange { element: Element, ground_size: usize },
    #[error("basis {0:?} listed twice")]
    DuplicateBasis(Vec<Element>),
    #[error("element {0} is a loop or an isthmus")]
    LoopOrIsthmus(Element),
    #[error("vertices {0} and {1} are not adjacent in the basis graph")]
    NotAnEdge(usize, usize),
    #[error("vertex {0} is out of range")]
    NoSuchVertex(usize),
    #[error("edge {0} is not on the supplied cycle")]
    EdgeNotOnCycle(String),
    #[error("glued edge set is not a Hamiltonian cycle: {0}")]
    GlueNotHamiltonian(String),
    #[error("invalid exchange: {0}")]
    InvalidExchange(String),
    #[error("template produced an invalid good cycle: {0}")]
    InvalidTemplate(String),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("edge {0} is a loop; multigraphs here are loop-free")]
    LoopEdge(usize),
    #[error("no edge with id {0}")]
    NoSuchEdge(usize),
    #[error("edge {0} is in the tree")]
    ChordInTree(usize),
    #[error("edge {0} is not a tree edge")]
    NotTreeEdge(usize),
    #[error("edge set is not a spanning tree")]
    NotSpanningTree,
    #[error("partition set {0} is empty")]
    EmptyPart(&'static str),
    #[error("lower path goes above the upper path")]
    PAboveQ,
    #[error("invalid step word: {0}")]
    BadWord(String),
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("basis graph has {0} vertices; Hamiltonian counting needs at least 3")]
    TooSmall(usize),
    #[error("no good cycle through edge ({0}, {1}) and no base case applies")]
    NoGoodCycle(usize, usize),
    #[error("minor does not match the element split: {0}")]
    MinorMismatch(String),
    #[error("instance exceeds desk scale: {0}")]
    ScaleExceeded(String),
    #[error("not an automorphism: {0}")]
    NotAutomorphism(String),
    #[error("parse error: {0}")]
    Parse(String),
}
