//! The three move types and their effect on a component.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::fixture::{Component, Piece, Position};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum MoveKind {
    /// Replace a bulb; it and everything to its right stop being part of the game.
    #[serde(rename = "fix")]
    FixBulb,
    /// Remove a socket that is not sandwiched between two bulbs.
    #[serde(rename = "quiet")]
    RemoveSocketQuiet,
    /// Remove a socket sandwiched between two bulbs; the mover must move again.
    #[serde(rename = "shock")]
    RemoveSocketShock,
}

impl MoveKind {
    pub fn is_shock(self) -> bool {
        self == MoveKind::RemoveSocketShock
    }
}

/// A move inside a single component.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Move {
    pub index: usize,
    pub kind: MoveKind,
}

impl Move {
    pub fn fix(index: usize) -> Self {
        Move { index, kind: MoveKind::FixBulb }
    }

    pub fn quiet(index: usize) -> Self {
        Move { index, kind: MoveKind::RemoveSocketQuiet }
    }

    pub fn shock(index: usize) -> Self {
        Move { index, kind: MoveKind::RemoveSocketShock }
    }
}

/// A move in a sum, addressed by component index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PositionMove {
    pub component: usize,
    #[serde(flatten)]
    pub mv: Move,
}

impl PositionMove {
    pub fn new(component: usize, mv: Move) -> Self {
        PositionMove { component, mv }
    }

    pub fn kind(&self) -> MoveKind {
        self.mv.kind
    }
}

impl fmt::Display for PositionMove {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let what = match self.mv.kind {
            MoveKind::FixBulb => "fix bulb",
            MoveKind::RemoveSocketQuiet => "remove socket (quiet)",
            MoveKind::RemoveSocketShock => "remove socket (shock, move again)",
        };
        write!(f, "component {}, piece {}: {what}", self.component, self.mv.index)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MoveError {
    #[error("piece index {index} out of bounds for component of length {len}")]
    OutOfBounds { index: usize, len: usize },
    #[error("component index {component} out of bounds for position with {count} components")]
    NoSuchComponent { component: usize, count: usize },
    #[error("{kind:?} does not apply to the piece at index {index}")]
    WrongPiece { index: usize, kind: MoveKind },
}

/// Kind of the removal of the socket at `index`: a shock iff both neighbours
/// exist and are bulbs.
fn socket_kind(pieces: &[Piece], index: usize) -> MoveKind {
    let left = index.checked_sub(1).and_then(|i| pieces.get(i));
    let right = pieces.get(index + 1);
    if left == Some(&Piece::Bulb) && right == Some(&Piece::Bulb) {
        MoveKind::RemoveSocketShock
    } else {
        MoveKind::RemoveSocketQuiet
    }
}

/// One move per piece, in piece order.
pub fn legal_moves(component: &Component) -> Vec<Move> {
    let pieces = component.pieces();
    pieces
        .iter()
        .enumerate()
        .map(|(index, piece)| match piece {
            Piece::Bulb => Move::fix(index),
            Piece::Socket => Move { index, kind: socket_kind(pieces, index) },
        })
        .collect()
}

pub fn check(component: &Component, mv: Move) -> Result<(), MoveError> {
    let pieces = component.pieces();
    let piece = *pieces
        .get(mv.index)
        .ok_or(MoveError::OutOfBounds { index: mv.index, len: pieces.len() })?;
    let ok = match mv.kind {
        MoveKind::FixBulb => piece == Piece::Bulb,
        kind => piece == Piece::Socket && socket_kind(pieces, mv.index) == kind,
    };
    if ok {
        Ok(())
    } else {
        Err(MoveError::WrongPiece { index: mv.index, kind: mv.kind })
    }
}

pub fn apply(component: &Component, mv: Move) -> Result<Component, MoveError> {
    check(component, mv)?;
    let pieces = component.pieces();
    let next = match mv.kind {
        MoveKind::FixBulb => pieces[..mv.index].to_vec(),
        MoveKind::RemoveSocketQuiet | MoveKind::RemoveSocketShock => {
            let mut v = Vec::with_capacity(pieces.len() - 1);
            v.extend_from_slice(&pieces[..mv.index]);
            v.extend_from_slice(&pieces[mv.index + 1..]);
            v
        }
    };
    Ok(Component::new(next))
}

pub fn legal_moves_position(position: &Position) -> Vec<PositionMove> {
    position
        .components()
        .iter()
        .enumerate()
        .flat_map(|(ci, c)| legal_moves(c).into_iter().map(move |mv| PositionMove::new(ci, mv)))
        .collect()
}

/// Applies a move to one component; the others are untouched and empty
/// components keep their slot.
pub fn apply_position(position: &Position, mv: PositionMove) -> Result<Position, MoveError> {
    let count = position.components().len();
    let target = position
        .components()
        .get(mv.component)
        .ok_or(MoveError::NoSuchComponent { component: mv.component, count })?;
    let replaced = apply(target, mv.mv)?;
    let mut next = position.clone();
    next.components_mut()[mv.component] = replaced;
    Ok(next)
}
