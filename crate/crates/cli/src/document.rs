//! JSON game documents.
//!
//! ```json
//! {
//!   "players": ["a", "b", "c"],
//!   "blocks": [["a", "b"], ["c"]],
//!   "d": [1, 1],
//!   "worths": { "a,c": "1", "a,b,c": "-1/2" }
//! }
//! ```
//!
//! A coalition key lists member names separated by commas. Any member order is accepted on
//! input; output lists members in player order and coalitions in ascending mask order.
//! Worths are integers or `p/q` strings. Absent coalitions are worth 0.

use dowen_core::{
    format_scalar, parse_scalar, Coalition, CoalitionStructure, DiversityBounds, DiversityGame,
    Game,
};
use indexmap::IndexMap;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GameDocument {
    pub players: Vec<String>,
    pub blocks: Vec<Vec<String>>,
    pub d: Vec<usize>,
    #[serde(default)]
    pub worths: IndexMap<String, String>,
}

#[derive(Debug, Error)]
pub enum DocumentError {
    #[error("malformed document: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Game(#[from] dowen_core::Error),
    #[error("unknown player `{name}` in `{context}`")]
    UnknownPlayer { name: String, context: String },
    #[error("player `{name}` repeated in `{context}`")]
    RepeatedPlayer { name: String, context: String },
    #[error("the empty coalition cannot be given a worth")]
    EmptyKey,
    #[error("worth of `{key}`: {source}")]
    Worth {
        key: String,
        source: dowen_core::Error,
    },
}

fn members(names: &[String], list: &[&str], context: &str) -> Result<Coalition, DocumentError> {
    let mut s = Coalition::EMPTY;
    for &name in list {
        let index =
            names
                .iter()
                .position(|x| x == name)
                .ok_or_else(|| DocumentError::UnknownPlayer {
                    name: name.to_string(),
                    context: context.to_string(),
                })?;
        let p = dowen_core::PlayerId(index);
        if s.contains(p) {
            return Err(DocumentError::RepeatedPlayer {
                name: name.to_string(),
                context: context.to_string(),
            });
        }
        s = s.with(p);
    }
    Ok(s)
}

fn parse_key(names: &[String], key: &str) -> Result<Coalition, DocumentError> {
    if key.is_empty() || key == "∅" {
        return Err(DocumentError::EmptyKey);
    }
    let list: Vec<&str> = key.split(',').collect();
    members(names, &list, key)
}

/// Member names in player order, joined by commas.
pub fn coalition_key(names: &[String], s: Coalition) -> String {
    s.players()
        .map(|p| names[p.index()].as_str())
        .collect::<Vec<_>>()
        .join(",")
}

impl GameDocument {
    pub fn into_game(self) -> Result<DiversityGame, DocumentError> {
        let names = self.players;
        let mut worths = Vec::with_capacity(self.worths.len());
        for (key, literal) in &self.worths {
            let s = parse_key(&names, key)?;
            let value = parse_scalar(literal).map_err(|source| DocumentError::Worth {
                key: key.clone(),
                source,
            })?;
            worths.push((s, value));
        }
        let game = Game::new(names.clone(), worths)?;
        let blocks = self
            .blocks
            .iter()
            .map(|b| {
                let list: Vec<&str> = b.iter().map(String::as_str).collect();
                members(&names, &list, &b.join(","))
            })
            .collect::<Result<Vec<_>, _>>()?;
        let structure = CoalitionStructure::new(names.len(), blocks)?;
        Ok(DiversityGame::new(
            game,
            structure,
            DiversityBounds::new(self.d),
        )?)
    }

    pub fn from_game(g: &DiversityGame) -> Self {
        let names = g.game().names();
        GameDocument {
            players: names.to_vec(),
            blocks: g
                .structure()
                .blocks()
                .iter()
                .map(|b| b.players().map(|p| names[p.index()].clone()).collect())
                .collect(),
            d: g.bounds().as_slice().to_vec(),
            worths: g
                .game()
                .nonzero()
                .map(|(s, w)| (coalition_key(names, s), format_scalar(w)))
                .collect(),
        }
    }
}

pub fn parse_game(text: &str) -> Result<DiversityGame, DocumentError> {
    let doc: GameDocument = serde_json::from_str(text)?;
    doc.into_game()
}

/// Pretty-printed canonical document with a trailing newline.
pub fn emit_game(g: &DiversityGame) -> String {
    let mut text = serde_json::to_string_pretty(&GameDocument::from_game(g)).expect("plain data");
    text.push('\n');
    text
}

/// Single-line canonical document.
pub fn emit_game_compact(g: &DiversityGame) -> String {
    serde_json::to_string(&GameDocument::from_game(g)).expect("plain data")
}

/// Nonzero worths of `v` as a single-line JSON object.
pub fn emit_worths(v: &Game) -> String {
    let map: IndexMap<String, String> = v
        .nonzero()
        .map(|(s, w)| (coalition_key(v.names(), s), format_scalar(w)))
        .collect();
    serde_json::to_string(&map).expect("plain data")
}
