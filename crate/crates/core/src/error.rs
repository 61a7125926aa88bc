use thiserror::Error;

/// Largest player count a dense worth table may hold.
pub const MAX_PLAYERS: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("a game needs at least one player")]
    NoPlayers,
    #[error("{n} players exceeds the hard cap of {max}", max = MAX_PLAYERS)]
    TooManyPlayers { n: usize },
    #[error("duplicate player name `{0}`")]
    DuplicatePlayer(String),
    #[error("invalid player name `{0}`")]
    InvalidPlayerName(String),
    #[error("unknown player `{0}`")]
    UnknownPlayer(String),
    #[error("player index {index} out of range for {n} players")]
    PlayerOutOfRange { index: usize, n: usize },
    #[error("coalition {mask:#b} has members outside {n} players")]
    CoalitionOutOfRange { mask: u32, n: usize },
    #[error("coalition {mask:#b} listed twice")]
    DuplicateCoalition { mask: u32 },
    #[error("the empty coalition must be worth 0")]
    NonzeroEmptyWorth,
    #[error("operation needs a nonempty coalition")]
    EmptyCoalition,
    #[error("player counts differ ({left} vs {right})")]
    PlayerCountMismatch { left: usize, right: usize },
    #[error("players must be distinct")]
    SamePlayer,
    #[error("invalid coalition structure: {0}")]
    InvalidStructure(String),
    #[error("{blocks} blocks but {bounds} diversity bounds")]
    BoundsLengthMismatch { blocks: usize, bounds: usize },
    #[error("bound d = {d} for block {block} must lie in 1..={size}")]
    BoundOutOfRange { block: usize, d: usize, size: usize },
    #[error("block index {block} out of range for {m} blocks")]
    BlockOutOfRange { block: usize, m: usize },
    #[error("cannot remove the last player")]
    LastPlayer,
    #[error("permutation oracle is limited to {max} players, got {n}")]
    OracleTooLarge { n: usize, max: usize },
    #[error("dividend of the empty coalition must be 0")]
    NonzeroEmptyDividend,
    #[error("swap transform precondition failed: {0}")]
    SwapPrecondition(String),
    #[error("unknown value `{0}`")]
    UnknownValue(String),
    #[error("unknown axiom `{0}`")]
    UnknownAxiom(String),
    #[error("unknown fixture `{0}`")]
    UnknownFixture(String),
    #[error("invalid generator spec: {0}")]
    InvalidSpec(String),
    #[error("malformed rational `{0}`")]
    MalformedRational(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
