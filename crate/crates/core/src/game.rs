//! Games, coalition structures and diversity constraints.

use std::collections::HashSet;
use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result, MAX_PLAYERS};
use crate::scalar::{int, Scalar};

/// Canonical index of a player: its position in the game's name list.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PlayerId(pub usize);

impl PlayerId {
    pub fn index(self) -> usize {
        self.0
    }

    fn bit(self) -> u32 {
        1 << self.0
    }
}

impl fmt::Display for PlayerId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

/// A set of players, stored as a bitmask over player indices.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Coalition(u32);

impl Coalition {
    pub const EMPTY: Coalition = Coalition(0);

    pub const fn from_mask(mask: u32) -> Self {
        Coalition(mask)
    }

    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_PLAYERS);
        Coalition(((1u64 << n) - 1) as u32)
    }

    pub fn singleton(p: PlayerId) -> Self {
        Coalition(p.bit())
    }

    pub fn from_players<I: IntoIterator<Item = usize>>(players: I) -> Self {
        Coalition(players.into_iter().fold(0, |m, p| m | (1 << p)))
    }

    /// Every coalition over `n` players in ascending mask order, starting with the empty one.
    pub fn all(n: usize) -> impl Iterator<Item = Coalition> {
        (0..1u32 << n).map(Coalition)
    }

    pub const fn mask(self) -> u32 {
        self.0
    }

    pub(crate) fn index(self) -> usize {
        self.0 as usize
    }

    pub fn contains(self, p: PlayerId) -> bool {
        self.0 & p.bit() != 0
    }

    pub fn with(self, p: PlayerId) -> Self {
        Coalition(self.0 | p.bit())
    }

    pub fn without(self, p: PlayerId) -> Self {
        Coalition(self.0 & !p.bit())
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset_of(self, other: Coalition) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: Coalition) -> Self {
        Coalition(self.0 | other.0)
    }

    pub fn intersection(self, other: Coalition) -> Self {
        Coalition(self.0 & other.0)
    }

    pub fn difference(self, other: Coalition) -> Self {
        Coalition(self.0 & !other.0)
    }

    pub fn fits(self, n: usize) -> bool {
        self.is_subset_of(Coalition::full(n))
    }

    pub fn players(self) -> impl Iterator<Item = PlayerId> {
        let mut rest = self.0;
        std::iter::from_fn(move || {
            if rest == 0 {
                return None;
            }
            let p = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            Some(PlayerId(p))
        })
    }

    /// All subsets of `self`, ascending.
    pub fn subsets(self) -> impl Iterator<Item = Coalition> {
        let full = self.0;
        let mut next = Some(0u32);
        std::iter::from_fn(move || {
            let cur = next?;
            next = if cur == full {
                None
            } else {
                Some((cur.wrapping_sub(full)) & full)
            };
            Some(Coalition(cur))
        })
    }

    /// Re-expresses `self ∩ within` over the members of `within`, renumbered 0..|within|.
    pub fn compress(self, within: Coalition) -> Coalition {
        let mut out = 0;
        for (k, p) in within.players().enumerate() {
            if self.contains(p) {
                out |= 1 << k;
            }
        }
        Coalition(out)
    }

    /// Inverse of [`Coalition::compress`].
    pub fn expand(self, within: Coalition) -> Coalition {
        let mut out = 0;
        for (k, p) in within.players().enumerate() {
            if self.0 & (1 << k) != 0 {
                out |= p.bit();
            }
        }
        Coalition(out)
    }

    /// Image under the transposition of players `i` and `j`.
    pub fn swapped(self, i: PlayerId, j: PlayerId) -> Coalition {
        match (self.contains(i), self.contains(j)) {
            (true, false) => self.without(i).with(j),
            (false, true) => self.without(j).with(i),
            _ => self,
        }
    }
}

pub fn default_names(n: usize) -> Vec<String> {
    (1..=n).map(|k| k.to_string()).collect()
}

fn validate_names(names: &[String]) -> Result<()> {
    if names.is_empty() {
        return Err(Error::NoPlayers);
    }
    if names.len() > MAX_PLAYERS {
        return Err(Error::TooManyPlayers { n: names.len() });
    }
    let mut seen = HashSet::new();
    for name in names {
        if name.is_empty() || name.contains(',') || name.trim() != name || name == "∅" {
            return Err(Error::InvalidPlayerName(name.clone()));
        }
        if !seen.insert(name.as_str()) {
            return Err(Error::DuplicatePlayer(name.clone()));
        }
    }
    Ok(())
}

/// A TU-game: a dense table of exact worths indexed by coalition mask, with `v(∅) = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Game {
    names: Vec<String>,
    worth: Vec<Scalar>,
}

impl Game {
    /// Builds a game from sparse worths; unlisted coalitions are worth 0.
    pub fn new<I>(names: Vec<String>, worths: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Coalition, Scalar)>,
    {
        validate_names(&names)?;
        let n = names.len();
        let mut table = vec![Scalar::zero(); 1 << n];
        let mut seen = HashSet::new();
        for (s, value) in worths {
            if !s.fits(n) {
                return Err(Error::CoalitionOutOfRange { mask: s.mask(), n });
            }
            if !seen.insert(s) {
                return Err(Error::DuplicateCoalition { mask: s.mask() });
            }
            if s.is_empty() && !value.is_zero() {
                return Err(Error::NonzeroEmptyWorth);
            }
            table[s.index()] = value;
        }
        Ok(Game {
            names,
            worth: table,
        })
    }

    pub fn from_table(names: Vec<String>, table: Vec<Scalar>) -> Result<Self> {
        validate_names(&names)?;
        if table.len() != 1 << names.len() {
            return Err(Error::PlayerCountMismatch {
                left: names.len(),
                right: table.len().trailing_zeros() as usize,
            });
        }
        if !table[0].is_zero() {
            return Err(Error::NonzeroEmptyWorth);
        }
        Ok(Game {
            names,
            worth: table,
        })
    }

    pub(crate) fn from_table_unchecked(names: Vec<String>, table: Vec<Scalar>) -> Self {
        debug_assert_eq!(table.len(), 1 << names.len());
        debug_assert!(table[0].is_zero());
        Game {
            names,
            worth: table,
        }
    }

    pub fn zero(names: Vec<String>) -> Result<Self> {
        Game::new(names, std::iter::empty())
    }

    /// `u_S` over players named `1..=n`.
    pub fn unanimity(n: usize, s: Coalition) -> Result<Self> {
        Game::unanimity_on(default_names(n), s)
    }

    pub fn unanimity_on(names: Vec<String>, s: Coalition) -> Result<Self> {
        validate_names(&names)?;
        let n = names.len();
        if s.is_empty() {
            return Err(Error::EmptyCoalition);
        }
        if !s.fits(n) {
            return Err(Error::CoalitionOutOfRange { mask: s.mask(), n });
        }
        let table = Coalition::all(n)
            .map(|t| {
                if s.is_subset_of(t) {
                    int(1)
                } else {
                    Scalar::zero()
                }
            })
            .collect();
        Ok(Game {
            names,
            worth: table,
        })
    }

    pub fn n(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, p: PlayerId) -> &str {
        &self.names[p.0]
    }

    pub fn player(&self, name: &str) -> Option<PlayerId> {
        self.names.iter().position(|x| x == name).map(PlayerId)
    }

    pub fn grand_coalition(&self) -> Coalition {
        Coalition::full(self.n())
    }

    pub fn worth(&self, s: Coalition) -> &Scalar {
        &self.worth[s.index()]
    }

    pub fn grand_worth(&self) -> &Scalar {
        self.worth.last().expect("table is never empty")
    }

    pub fn table(&self) -> &[Scalar] {
        &self.worth
    }

    pub fn is_zero(&self) -> bool {
        self.worth.iter().all(Zero::is_zero)
    }

    /// Coalitions with nonzero worth, ascending by mask.
    pub fn nonzero(&self) -> impl Iterator<Item = (Coalition, &Scalar)> {
        self.worth
            .iter()
            .enumerate()
            .filter(|(_, w)| !w.is_zero())
            .map(|(s, w)| (Coalition(s as u32), w))
    }

    fn check_same_n(&self, other: &Game) -> Result<()> {
        if self.n() != other.n() {
            return Err(Error::PlayerCountMismatch {
                left: self.n(),
                right: other.n(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Game) -> Result<Game> {
        self.check_same_n(other)?;
        let table = self
            .worth
            .iter()
            .zip(&other.worth)
            .map(|(a, b)| a + b)
            .collect();
        Ok(Game::from_table_unchecked(self.names.clone(), table))
    }

    pub fn sub(&self, other: &Game) -> Result<Game> {
        self.check_same_n(other)?;
        let table = self
            .worth
            .iter()
            .zip(&other.worth)
            .map(|(a, b)| a - b)
            .collect();
        Ok(Game::from_table_unchecked(self.names.clone(), table))
    }

    pub fn scale(&self, c: &Scalar) -> Game {
        let table = self.worth.iter().map(|a| a * c).collect();
        Game::from_table_unchecked(self.names.clone(), table)
    }

    /// The subgame on `s`, with players renumbered in ascending order of their old index.
    pub fn subgame(&self, s: Coalition) -> Result<Game> {
        if s.is_empty() {
            return Err(Error::EmptyCoalition);
        }
        if !s.fits(self.n()) {
            return Err(Error::CoalitionOutOfRange {
                mask: s.mask(),
                n: self.n(),
            });
        }
        let names = s.players().map(|p| self.names[p.0].clone()).collect();
        let table = Coalition::all(s.len())
            .map(|t| self.worth(t.expand(s)).clone())
            .collect();
        Ok(Game::from_table_unchecked(names, table))
    }

    /// `v(S ∪ i) = v(S)` for every `S ⊆ N \ {i}`.
    pub fn is_null(&self, i: PlayerId) -> bool {
        let rest = self.grand_coalition().without(i);
        rest.subsets()
            .all(|s| self.worth(s.with(i)) == self.worth(s))
    }

    pub fn are_symmetric(&self, i: PlayerId, j: PlayerId) -> Result<bool> {
        if i == j {
            return Err(Error::SamePlayer);
        }
        let rest = self.grand_coalition().without(i).without(j);
        Ok(rest
            .subsets()
            .all(|s| self.worth(s.with(i)) == self.worth(s.with(j))))
    }

    /// `v ∘ π` for the transposition `π` of `i` and `j`.
    pub fn swap_players(&self, i: PlayerId, j: PlayerId) -> Game {
        let table = Coalition::all(self.n())
            .map(|s| self.worth(s.swapped(i, j)).clone())
            .collect();
        Game::from_table_unchecked(self.names.clone(), table)
    }

    /// Appends a player `name` at index `n` whose presence never changes any worth.
    pub(crate) fn extend_with_null(&self, name: String) -> Game {
        let n = self.n();
        let low = Coalition::full(n);
        let table = Coalition::all(n + 1)
            .map(|s| self.worth(s.intersection(low)).clone())
            .collect();
        let mut names = self.names.clone();
        names.push(name);
        Game::from_table_unchecked(names, table)
    }
}

/// An ordered partition of the players into blocks.
///
/// Blocks induced on a sub-population may be empty; such blocks are inert and never
/// hold players.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoalitionStructure {
    n: usize,
    blocks: Vec<Coalition>,
}

impl CoalitionStructure {
    pub fn new(n: usize, blocks: Vec<Coalition>) -> Result<Self> {
        if n == 0 {
            return Err(Error::NoPlayers);
        }
        if n > MAX_PLAYERS {
            return Err(Error::TooManyPlayers { n });
        }
        let mut union = Coalition::EMPTY;
        for (k, &b) in blocks.iter().enumerate() {
            if b.is_empty() {
                return Err(Error::InvalidStructure(format!("block {k} is empty")));
            }
            if !b.fits(n) {
                return Err(Error::InvalidStructure(format!(
                    "block {k} has unknown players"
                )));
            }
            if !union.intersection(b).is_empty() {
                return Err(Error::InvalidStructure(format!(
                    "block {k} overlaps an earlier block"
                )));
            }
            union = union.union(b);
        }
        if union != Coalition::full(n) {
            return Err(Error::InvalidStructure(
                "blocks do not cover every player".into(),
            ));
        }
        Ok(CoalitionStructure { n, blocks })
    }

    /// Consecutive blocks of the given sizes.
    pub fn from_sizes(sizes: &[usize]) -> Result<Self> {
        let mut blocks = Vec::with_capacity(sizes.len());
        let mut start = 0;
        for &size in sizes {
            blocks.push(Coalition::from_players(start..start + size));
            start += size;
        }
        CoalitionStructure::new(start, blocks)
    }

    pub fn singletons(n: usize) -> Result<Self> {
        CoalitionStructure::new(
            n,
            (0..n).map(|p| Coalition::singleton(PlayerId(p))).collect(),
        )
    }

    pub fn grand(n: usize) -> Result<Self> {
        CoalitionStructure::new(n, vec![Coalition::full(n)])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of blocks, inert ones included.
    pub fn m(&self) -> usize {
        self.blocks.len()
    }

    pub fn blocks(&self) -> &[Coalition] {
        &self.blocks
    }

    pub fn block(&self, k: usize) -> Coalition {
        self.blocks[k]
    }

    pub fn block_of(&self, p: PlayerId) -> usize {
        self.blocks
            .iter()
            .position(|b| b.contains(p))
            .expect("every player lies in a block")
    }

    pub fn is_inert(&self, k: usize) -> bool {
        self.blocks[k].is_empty()
    }

    pub fn active_blocks(&self) -> usize {
        self.blocks.iter().filter(|b| !b.is_empty()).count()
    }

    /// Number of blocks meeting `s`.
    pub fn blocks_meeting(&self, s: Coalition) -> usize {
        self.blocks
            .iter()
            .filter(|b| !b.intersection(s).is_empty())
            .count()
    }

    /// `{B_1 ∩ S, …, B_m ∩ S}` over the players of `s` renumbered as in [`Game::subgame`].
    pub fn induced(&self, s: Coalition) -> CoalitionStructure {
        CoalitionStructure {
            n: s.len(),
            blocks: self.blocks.iter().map(|b| b.compress(s)).collect(),
        }
    }

    fn with_new_player_in(&self, k: usize) -> CoalitionStructure {
        let mut blocks = self.blocks.clone();
        blocks[k] = blocks[k].with(PlayerId(self.n));
        CoalitionStructure {
            n: self.n + 1,
            blocks,
        }
    }
}

/// Per-block minimum number of members a diverse coalition must contain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiversityBounds(Vec<usize>);

impl DiversityBounds {
    pub fn new(d: Vec<usize>) -> Self {
        DiversityBounds(d)
    }

    pub fn get(&self, k: usize) -> usize {
        self.0[k]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// `|S ∩ B_k| ≥ d_k` for every block.
pub fn is_diverse(s: Coalition, structure: &CoalitionStructure, bounds: &DiversityBounds) -> bool {
    structure
        .blocks
        .iter()
        .zip(bounds.as_slice())
        .all(|(b, &d)| s.intersection(*b).len() >= d)
}

/// `D(N, 𝓑, d)` ascending by mask.
pub fn diverse_coalitions(
    structure: &CoalitionStructure,
    bounds: &DiversityBounds,
) -> Vec<Coalition> {
    Coalition::all(structure.n)
        .filter(|&s| is_diverse(s, structure, bounds))
        .collect()
}

/// A TU-game with diversity constraints `(N, v, 𝓑, d)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiversityGame {
    game: Game,
    structure: CoalitionStructure,
    bounds: DiversityBounds,
}

impl DiversityGame {
    /// Requires `1 ≤ d_k ≤ |B_k|` for every block.
    pub fn new(game: Game, structure: CoalitionStructure, bounds: DiversityBounds) -> Result<Self> {
        if game.n() != structure.n() {
            return Err(Error::PlayerCountMismatch {
                left: game.n(),
                right: structure.n(),
            });
        }
        if bounds.len() != structure.m() {
            return Err(Error::BoundsLengthMismatch {
                blocks: structure.m(),
                bounds: bounds.len(),
            });
        }
        for (k, (b, &d)) in structure.blocks().iter().zip(bounds.as_slice()).enumerate() {
            if d == 0 || d > b.len() {
                return Err(Error::BoundOutOfRange {
                    block: k,
                    d,
                    size: b.len(),
                });
            }
        }
        Ok(DiversityGame {
            game,
            structure,
            bounds,
        })
    }

    /// Same structure and bounds, different worths.
    pub fn with_game(&self, game: Game) -> Result<Self> {
        if game.n() != self.game.n() {
            return Err(Error::PlayerCountMismatch {
                left: self.game.n(),
                right: game.n(),
            });
        }
        Ok(DiversityGame {
            game,
            structure: self.structure.clone(),
            bounds: self.bounds.clone(),
        })
    }

    pub fn game(&self) -> &Game {
        &self.game
    }

    pub fn structure(&self) -> &CoalitionStructure {
        &self.structure
    }

    pub fn bounds(&self) -> &DiversityBounds {
        &self.bounds
    }

    pub fn n(&self) -> usize {
        self.game.n()
    }

    pub fn is_diverse(&self, s: Coalition) -> bool {
        is_diverse(s, &self.structure, &self.bounds)
    }

    pub fn diverse_coalitions(&self) -> Vec<Coalition> {
        diverse_coalitions(&self.structure, &self.bounds)
    }

    /// `v^d`: worths kept on diverse coalitions, zero elsewhere.
    pub fn restrict_to_diverse(&self) -> Game {
        let table = Coalition::all(self.n())
            .map(|s| {
                if self.is_diverse(s) {
                    self.game.worth(s).clone()
                } else {
                    Scalar::zero()
                }
            })
            .collect();
        Game::from_table_unchecked(self.game.names.clone(), table)
    }

    /// `(N, v^d, 𝓑, d)`.
    pub fn restricted(&self) -> DiversityGame {
        DiversityGame {
            game: self.restrict_to_diverse(),
            structure: self.structure.clone(),
            bounds: self.bounds.clone(),
        }
    }

    /// Every coalition of nonzero worth is diverse.
    pub fn is_diverse_game(&self) -> bool {
        self.game.nonzero().all(|(s, _)| self.is_diverse(s))
    }

    /// `|𝓑(i)| − d_k ≥ 1`.
    pub fn is_out(&self, i: PlayerId) -> bool {
        let k = self.structure.block_of(i);
        self.structure.block(k).len() > self.bounds.get(k)
    }

    pub fn is_i_out_diverse(&self, i: PlayerId) -> bool {
        self.is_diverse_game() && self.is_out(i)
    }

    /// Players that are out, ascending.
    pub fn out_players(&self) -> Vec<PlayerId> {
        (0..self.n())
            .map(PlayerId)
            .filter(|&p| self.is_out(p))
            .collect()
    }

    /// Adds a null player `l` (index `n`) to block `k`: `(v)_{+l}(S) = v(S \ {l})`.
    pub fn add_outside_player(&self, k: usize) -> Result<DiversityGame> {
        if k >= self.structure.m() {
            return Err(Error::BlockOutOfRange {
                block: k,
                m: self.structure.m(),
            });
        }
        if self.n() + 1 > MAX_PLAYERS {
            return Err(Error::TooManyPlayers { n: self.n() + 1 });
        }
        Ok(DiversityGame {
            game: self.game.extend_with_null(self.fresh_name()),
            structure: self.structure.with_new_player_in(k),
            bounds: self.bounds.clone(),
        })
    }

    fn fresh_name(&self) -> String {
        let taken: HashSet<&str> = self.game.names.iter().map(String::as_str).collect();
        std::iter::once("l".to_string())
            .chain((1..).map(|k| format!("l{k}")))
            .find(|c| !taken.contains(c.as_str()))
            .expect("unbounded candidate stream")
    }

    /// `(N \ {i}, v_{|N\{i}}, 𝓑_{|N\{i}}, d)`. Bounds are kept as they are, so a block may
    /// end up smaller than its quota.
    pub fn remove_player(&self, i: PlayerId) -> Result<DiversityGame> {
        if self.n() < 2 {
            return Err(Error::LastPlayer);
        }
        if i.0 >= self.n() {
            return Err(Error::PlayerOutOfRange {
                index: i.0,
                n: self.n(),
            });
        }
        self.subgame(self.game.grand_coalition().without(i))
    }

    pub fn subgame(&self, s: Coalition) -> Result<DiversityGame> {
        Ok(DiversityGame {
            game: self.game.subgame(s)?,
            structure: self.structure.induced(s),
            bounds: self.bounds.clone(),
        })
    }
}

/// Index a surviving player takes after `removed` is dropped.
pub fn index_after_removal(p: PlayerId, removed: PlayerId) -> Option<PlayerId> {
    use std::cmp::Ordering::*;
    match p.0.cmp(&removed.0) {
        Less => Some(p),
        Equal => None,
        Greater => Some(PlayerId(p.0 - 1)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    fn c(players: &[usize]) -> Coalition {
        // 1-based, matching default names
        Coalition::from_players(players.iter().map(|p| p - 1))
    }

    fn three_player_structure() -> (CoalitionStructure, DiversityBounds) {
        (
            CoalitionStructure::new(3, vec![c(&[1, 2]), c(&[3])]).unwrap(),
            DiversityBounds::new(vec![1, 1]),
        )
    }

    #[test]
    fn make_game_defaults_to_zero() {
        let g = Game::new(default_names(2), []).unwrap();
        assert!(g.is_zero());
        let u = Game::new(default_names(2), [(c(&[1, 2]), int(1))]).unwrap();
        assert_eq!(u, Game::unanimity(2, c(&[1, 2])).unwrap());
    }

    #[test]
    fn make_game_errors() {
        assert_eq!(
            Game::new(default_names(1), [(Coalition::EMPTY, int(1))]),
            Err(Error::NonzeroEmptyWorth)
        );
        assert!(Game::new(default_names(1), [(Coalition::EMPTY, int(0))]).is_ok());
        assert_eq!(
            Game::new(vec!["a".into(), "a".into()], []),
            Err(Error::DuplicatePlayer("a".into()))
        );
        assert_eq!(
            Game::zero(default_names(25)),
            Err(Error::TooManyPlayers { n: 25 })
        );
        assert!(matches!(
            Game::new(default_names(2), [(c(&[3]), int(1))]),
            Err(Error::CoalitionOutOfRange { .. })
        ));
        assert!(matches!(
            Game::zero(vec!["a,b".into()]),
            Err(Error::InvalidPlayerName(_))
        ));
    }

    #[test]
    fn unanimity_game() {
        let u = Game::unanimity(2, c(&[1])).unwrap();
        assert_eq!(u.worth(c(&[1])), &int(1));
        assert_eq!(u.worth(c(&[1, 2])), &int(1));
        assert_eq!(u.worth(c(&[2])), &int(0));
        let un = Game::unanimity(3, Coalition::full(3)).unwrap();
        assert_eq!(un.nonzero().count(), 1);
        assert_eq!(
            Game::unanimity(2, Coalition::EMPTY),
            Err(Error::EmptyCoalition)
        );
    }

    #[test]
    fn pointwise_arithmetic() {
        let u = Game::unanimity(3, c(&[1, 2])).unwrap();
        let zero = Game::zero(default_names(3)).unwrap();
        assert_eq!(u.add(&zero).unwrap(), u);
        assert!(u.sub(&u).unwrap().is_zero());
        let twice = u.scale(&int(2));
        assert_eq!(twice.worth(c(&[1, 2, 3])), &int(2));
        assert_eq!(twice.worth(c(&[1])), &int(0));
        assert!(matches!(
            u.add(&Game::zero(default_names(2)).unwrap()),
            Err(Error::PlayerCountMismatch { .. })
        ));
    }

    #[test]
    fn subgames() {
        let u12 = Game::unanimity(3, c(&[1, 2])).unwrap();
        assert_eq!(
            u12.subgame(c(&[1, 2])).unwrap(),
            Game::unanimity(2, c(&[1, 2])).unwrap()
        );
        assert_eq!(u12.subgame(Coalition::full(3)).unwrap(), u12);
        let u3 = Game::unanimity(3, c(&[3])).unwrap();
        assert!(u3.subgame(c(&[1, 2])).unwrap().is_zero());
        assert_eq!(u3.subgame(Coalition::EMPTY), Err(Error::EmptyCoalition));
        let sub = u3.subgame(c(&[1, 3])).unwrap();
        assert_eq!(sub.names(), &["1".to_string(), "3".to_string()]);
        assert_eq!(sub.worth(Coalition::from_mask(0b10)), &int(1));
    }

    #[test]
    fn induced_structures() {
        let (b, _) = three_player_structure();
        let on13 = b.induced(c(&[1, 3]));
        assert_eq!(
            on13.blocks(),
            &[Coalition::from_mask(0b01), Coalition::from_mask(0b10)]
        );
        assert_eq!(b.induced(Coalition::full(3)), b);
        let on12 = b.induced(c(&[1, 2]));
        assert_eq!(
            on12.blocks(),
            &[Coalition::from_mask(0b11), Coalition::EMPTY]
        );
        assert!(on12.is_inert(1));
        assert_eq!(on12.active_blocks(), 1);
    }

    #[test]
    fn diversity_checks() {
        let (b, d) = three_player_structure();
        assert!(is_diverse(c(&[1, 3]), &b, &d));
        assert!(!is_diverse(c(&[1, 2]), &b, &d));
        assert!(is_diverse(Coalition::full(3), &b, &d));
        assert_eq!(
            diverse_coalitions(&b, &d),
            vec![c(&[1, 3]), c(&[2, 3]), c(&[1, 2, 3])]
        );
        assert_eq!(
            diverse_coalitions(&b, &DiversityBounds::new(vec![2, 1])),
            vec![c(&[1, 2, 3])]
        );
        let grand = CoalitionStructure::grand(3).unwrap();
        assert_eq!(
            diverse_coalitions(&grand, &DiversityBounds::new(vec![1])).len(),
            7
        );
    }

    #[test]
    fn restriction() {
        let (b, d) = three_player_structure();
        let g = DiversityGame::new(Game::unanimity(3, c(&[3])).unwrap(), b, d).unwrap();
        assert!(!g.is_diverse_game());
        let vd = g.restrict_to_diverse();
        let nz: Vec<_> = vd.nonzero().map(|(s, w)| (s, w.clone())).collect();
        assert_eq!(
            nz,
            vec![
                (c(&[1, 3]), int(1)),
                (c(&[2, 3]), int(1)),
                (c(&[1, 2, 3]), int(1))
            ]
        );
        let r = g.restricted();
        assert!(r.is_diverse_game());
        assert_eq!(r.restrict_to_diverse(), vd);
        let zero = g.with_game(Game::zero(default_names(3)).unwrap()).unwrap();
        assert!(zero.restrict_to_diverse().is_zero());
        assert!(zero.is_diverse_game());
    }

    #[test]
    fn bounds_validation() {
        let (b, _) = three_player_structure();
        let v = Game::zero(default_names(3)).unwrap();
        assert!(matches!(
            DiversityGame::new(v.clone(), b.clone(), DiversityBounds::new(vec![1, 2])),
            Err(Error::BoundOutOfRange {
                block: 1,
                d: 2,
                size: 1
            })
        ));
        assert!(matches!(
            DiversityGame::new(v.clone(), b.clone(), DiversityBounds::new(vec![0, 1])),
            Err(Error::BoundOutOfRange { .. })
        ));
        assert!(matches!(
            DiversityGame::new(v, b, DiversityBounds::new(vec![1])),
            Err(Error::BoundsLengthMismatch { .. })
        ));
        assert!(CoalitionStructure::new(3, vec![c(&[1, 2]), c(&[2, 3])]).is_err());
        assert!(CoalitionStructure::new(3, vec![c(&[1, 2])]).is_err());
        assert!(CoalitionStructure::new(3, vec![c(&[1, 2, 3]), Coalition::EMPTY]).is_err());
    }

    #[test]
    fn null_and_symmetric_players() {
        let u12 = Game::unanimity(3, c(&[1, 2])).unwrap();
        assert!(u12.is_null(PlayerId(2)));
        assert!(!u12.is_null(PlayerId(0)));
        assert!(Game::zero(default_names(3)).unwrap().is_null(PlayerId(1)));
        assert_eq!(u12.are_symmetric(PlayerId(0), PlayerId(1)), Ok(true));
        assert_eq!(u12.are_symmetric(PlayerId(0), PlayerId(2)), Ok(false));
        assert_eq!(
            u12.are_symmetric(PlayerId(0), PlayerId(0)),
            Err(Error::SamePlayer)
        );
    }

    #[test]
    fn out_players() {
        let (b, d) = three_player_structure();
        let g = DiversityGame::new(Game::zero(default_names(3)).unwrap(), b.clone(), d).unwrap();
        assert!(g.is_out(PlayerId(0)));
        assert!(!g.is_out(PlayerId(2)));
        assert!(g.is_i_out_diverse(PlayerId(0)));
        assert!(!g.is_i_out_diverse(PlayerId(2)));
        let tight = DiversityGame::new(
            Game::zero(default_names(3)).unwrap(),
            b.clone(),
            DiversityBounds::new(vec![2, 1]),
        )
        .unwrap();
        assert!(!tight.is_out(PlayerId(0)));
        let nondiverse = DiversityGame::new(
            Game::unanimity(3, c(&[3])).unwrap(),
            b,
            DiversityBounds::new(vec![1, 1]),
        )
        .unwrap();
        assert!(!nondiverse.is_i_out_diverse(PlayerId(0)));
    }

    #[test]
    fn outside_player_round_trip() {
        let (b, d) = three_player_structure();
        let v = Game::new(
            default_names(3),
            [(c(&[1, 3]), int(2)), (c(&[1, 2, 3]), int(-1))],
        )
        .unwrap();
        let g = DiversityGame::new(v, b, d).unwrap();
        for k in 0..2 {
            let ext = g.add_outside_player(k).unwrap();
            let l = PlayerId(3);
            assert_eq!(ext.game().name(l), "l");
            assert!(ext.game().is_null(l));
            assert!(ext.structure().block(k).contains(l));
            assert!(ext.is_diverse_game());
            assert!(ext.is_i_out_diverse(l));
            assert_eq!(ext.remove_player(l).unwrap(), g);
        }
        assert!(matches!(
            g.add_outside_player(2),
            Err(Error::BlockOutOfRange { .. })
        ));
    }

    #[test]
    fn removing_tight_block_member_kills_diversity() {
        let b = CoalitionStructure::new(3, vec![c(&[1, 2]), c(&[3])]).unwrap();
        let v = Game::unanimity(3, c(&[1, 2, 3])).unwrap();
        let g = DiversityGame::new(v, b, DiversityBounds::new(vec![2, 1])).unwrap();
        let sub = g.remove_player(PlayerId(0)).unwrap();
        assert!(sub.diverse_coalitions().is_empty());
        assert!(sub.restrict_to_diverse().is_zero());
        assert!(!sub.is_out(PlayerId(0)));
    }

    #[test]
    fn remove_last_player_fails() {
        let g = DiversityGame::new(
            Game::zero(default_names(1)).unwrap(),
            CoalitionStructure::grand(1).unwrap(),
            DiversityBounds::new(vec![1]),
        )
        .unwrap();
        assert_eq!(g.remove_player(PlayerId(0)), Err(Error::LastPlayer));
    }

    #[test]
    fn coalition_helpers() {
        let s = Coalition::from_mask(0b1011);
        assert_eq!(s.subsets().count(), 8);
        assert_eq!(
            s.players().map(PlayerId::index).collect::<Vec<_>>(),
            vec![0, 1, 3]
        );
        let within = Coalition::from_mask(0b1110);
        assert_eq!(s.compress(within), Coalition::from_mask(0b101));
        assert_eq!(
            Coalition::from_mask(0b101).expand(within),
            Coalition::from_mask(0b1010)
        );
        assert_eq!(
            s.swapped(PlayerId(0), PlayerId(2)),
            Coalition::from_mask(0b1110)
        );
        assert_eq!(Coalition::EMPTY.subsets().count(), 1);
    }
}
