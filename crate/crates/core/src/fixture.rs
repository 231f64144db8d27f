//! Components, positions and their textual notation.
//!
//! A component is read left to right starting at the end nearest the plug.
//! Two input syntaxes are accepted: the character form (`b` for a
//! replaceable bulb, `s` for a broken socket) and the run form
//! (`b2s3b5`). Output always uses the character form.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Piece {
    /// Broken bulb in a live socket; can be replaced.
    Bulb,
    /// Broken socket.
    Socket,
}

impl Piece {
    pub fn as_char(self) -> char {
        match self {
            Piece::Bulb => 'b',
            Piece::Socket => 's',
        }
    }
}

/// A maximal run of identical pieces.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Run {
    Bulbs(usize),
    Sockets(usize),
}

impl Run {
    pub fn len(self) -> usize {
        match self {
            Run::Bulbs(n) | Run::Sockets(n) => n,
        }
    }

    pub fn is_empty(self) -> bool {
        self.len() == 0
    }

    pub fn piece(self) -> Piece {
        match self {
            Run::Bulbs(_) => Piece::Bulb,
            Run::Sockets(_) => Piece::Socket,
        }
    }

    fn new(piece: Piece, len: usize) -> Run {
        match piece {
            Piece::Bulb => Run::Bulbs(len),
            Piece::Socket => Run::Sockets(len),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("unexpected character {found:?} at byte {offset}")]
    Syntax { offset: usize, found: char },
    #[error("run of length 0 at byte {offset}")]
    ZeroRun { offset: usize },
    #[error("run length overflows at byte {offset}")]
    RunTooLong { offset: usize },
    #[error("component {index}: {inner}")]
    InComponent { index: usize, inner: Box<ParseError> },
}

/// One damaged stretch of a fixture.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Component {
    pieces: Vec<Piece>,
}

impl Component {
    pub fn new(pieces: Vec<Piece>) -> Self {
        Component { pieces }
    }

    pub fn empty() -> Self {
        Component::default()
    }

    pub fn from_runs<I: IntoIterator<Item = Run>>(runs: I) -> Self {
        let mut pieces = Vec::new();
        for run in runs {
            pieces.extend(std::iter::repeat_n(run.piece(), run.len()));
        }
        Component { pieces }
    }

    /// `k` bulbs, `m` sockets, then `rest`.
    pub fn prefixed(k: usize, m: usize, rest: &Component) -> Self {
        let mut pieces = Vec::with_capacity(k + m + rest.len());
        pieces.extend(std::iter::repeat_n(Piece::Bulb, k));
        pieces.extend(std::iter::repeat_n(Piece::Socket, m));
        pieces.extend_from_slice(&rest.pieces);
        Component { pieces }
    }

    /// The component of length `len` whose piece `i` is a socket iff bit `i`
    /// of `bits` is set.
    pub fn from_bits(len: usize, bits: u64) -> Self {
        debug_assert!(len <= 64);
        let pieces = (0..len)
            .map(|i| if bits >> i & 1 == 1 { Piece::Socket } else { Piece::Bulb })
            .collect();
        Component { pieces }
    }

    pub fn pieces(&self) -> &[Piece] {
        &self.pieces
    }

    pub fn len(&self) -> usize {
        self.pieces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pieces.is_empty()
    }

    pub fn bulbs(&self) -> usize {
        self.pieces.iter().filter(|&&p| p == Piece::Bulb).count()
    }

    pub fn sockets(&self) -> usize {
        self.len() - self.bulbs()
    }

    pub fn starts_with_bulb(&self) -> bool {
        self.pieces.first() == Some(&Piece::Bulb)
    }

    /// Maximal alternating runs, left to right.
    pub fn runs(&self) -> Vec<Run> {
        let mut runs = self.runs_rev().collect::<Vec<_>>();
        runs.reverse();
        runs
    }

    /// Maximal runs, right to left, without allocating.
    pub fn runs_rev(&self) -> RunsRev<'_> {
        RunsRev { rest: &self.pieces }
    }

    /// Run-length notation, e.g. `b2s3b5`.
    pub fn run_notation(&self) -> String {
        self.runs()
            .into_iter()
            .map(|r| format!("{}{}", r.piece().as_char(), r.len()))
            .collect()
    }
}

pub struct RunsRev<'a> {
    rest: &'a [Piece],
}

impl Iterator for RunsRev<'_> {
    type Item = Run;

    fn next(&mut self) -> Option<Run> {
        let &last = self.rest.last()?;
        let start = self
            .rest
            .iter()
            .rposition(|&p| p != last)
            .map_or(0, |i| i + 1);
        let len = self.rest.len() - start;
        self.rest = &self.rest[..start];
        Some(Run::new(last, len))
    }
}

/// Alternating run decomposition of a component.
pub fn runs_of(component: &Component) -> Vec<Run> {
    component.runs()
}

impl fmt::Display for Component {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for p in &self.pieces {
            write!(f, "{}", p.as_char())?;
        }
        Ok(())
    }
}

impl FromStr for Component {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        parse_component(s)
    }
}

/// Parses either `[bs]*` or `(b<n>|s<n>)*` with every `n >= 1`.
pub fn parse_component(text: &str) -> Result<Component, ParseError> {
    let bytes = text.as_bytes();
    let mut pieces = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let piece = match bytes[i] {
            b'b' => Piece::Bulb,
            b's' => Piece::Socket,
            _ => return Err(syntax_error(text, i)),
        };
        let digits_start = i + 1;
        let mut j = digits_start;
        while j < bytes.len() && bytes[j].is_ascii_digit() {
            j += 1;
        }
        if j == digits_start {
            pieces.push(piece);
        } else {
            let count: usize = text[digits_start..j]
                .parse()
                .map_err(|_| ParseError::RunTooLong { offset: digits_start })?;
            if count == 0 {
                return Err(ParseError::ZeroRun { offset: digits_start });
            }
            pieces.extend(std::iter::repeat_n(piece, count));
        }
        i = j;
    }
    Ok(Component { pieces })
}

fn syntax_error(text: &str, offset: usize) -> ParseError {
    let found = text[offset..].chars().next().unwrap_or('\0');
    ParseError::Syntax { offset, found }
}

/// A disjunctive sum of components.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Position {
    components: Vec<Component>,
}

impl Position {
    pub fn new(components: Vec<Component>) -> Self {
        Position { components }
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    pub fn components_mut(&mut self) -> &mut [Component] {
        &mut self.components
    }

    pub fn total_pieces(&self) -> usize {
        self.components.iter().map(Component::len).sum()
    }

    /// Component strings with empties dropped, sorted. Two positions with the
    /// same key are the same game.
    pub fn multiset_key(&self) -> Vec<Component> {
        let mut key: Vec<Component> =
            self.components.iter().filter(|c| !c.is_empty()).cloned().collect();
        key.sort_unstable();
        key
    }
}

impl From<Vec<Component>> for Position {
    fn from(components: Vec<Component>) -> Self {
        Position { components }
    }
}

impl fmt::Display for Position {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.components.is_empty() {
            return write!(f, "0");
        }
        for (i, c) in self.components.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl FromStr for Position {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        parse_position(s)
    }
}

/// Parses `component (+ component)*` or the literal `0`.
pub fn parse_position(text: &str) -> Result<Position, ParseError> {
    if text.trim() == "0" {
        return Ok(Position::default());
    }
    let mut components = Vec::new();
    let mut offset = 0;
    for (index, part) in text.split('+').enumerate() {
        let lead = part.len() - part.trim_start().len();
        let component = parse_component(part.trim()).map_err(|e| ParseError::InComponent {
            index,
            inner: Box::new(shift(e, offset + lead)),
        })?;
        components.push(component);
        offset += part.len() + 1;
    }
    Ok(Position { components })
}

fn shift(e: ParseError, by: usize) -> ParseError {
    match e {
        ParseError::Syntax { offset, found } => ParseError::Syntax { offset: offset + by, found },
        ParseError::ZeroRun { offset } => ParseError::ZeroRun { offset: offset + by },
        ParseError::RunTooLong { offset } => ParseError::RunTooLong { offset: offset + by },
        other => other,
    }
}
