//! Solver for the Christmas Lights' Fixture game.
//!
//! A fixture's damaged parts are components made of replaceable bulbs (`b`)
//! and broken sockets (`s`). Replacing a bulb also fixes everything to its
//! right; removing a socket joins its neighbours, and if both neighbours are
//! bulbs the player gets a shock and must move again. The last player to
//! move wins.
//!
//! [`grundy_fast`] computes the Grundy value (a nimber or the moon) of any
//! component in one right-to-left pass over its runs. [`grundy_oracle`] and
//! [`outcome_playout`] are exhaustive searches used to check it, and
//! [`best_line`] finds a winning turn.

pub mod cli;
pub mod fast;
pub mod fixture;
pub mod moves;
pub mod oracle;
pub mod strategy;
pub mod sum;
pub mod value;
pub mod verify;

pub use fast::{fold_trace, grundy_fast, triple_value, FoldStep};
pub use fixture::{parse_component, parse_position, runs_of, Component, ParseError, Piece, Position, Run};
pub use moves::{apply, apply_position, legal_moves, legal_moves_position, Move, MoveError, MoveKind, PositionMove};
pub use oracle::{
    grundy_oracle, grundy_oracle_unmemoized, mex, outcome_playout, EvalSets, PlayoutTable, TranspositionTable,
};
pub use strategy::{best_line, validate_line, WinningLine};
pub use sum::{gsum, gsum_all, outcome, position_value, Outcome};
pub use value::GrundyValue;
pub use verify::{playout_check, verify_range, PlayoutConfig, PlayoutReport, VerifyReport};
