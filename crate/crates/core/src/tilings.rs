//! Exhaustive enumeration of colored board tilings and color decompositions.
//!
//! This is the ground-truth oracle for every other backend. An (n+1)-board is
//! tiled with black squares, i-rectangles (r colors) and k-rectangles (s colors);
//! black squares may only sit in the first min(i,k) - 1 cells, which forces them
//! to form a prefix.
//!
//! Counting walks every *shape* (the sequence of piece kinds) and weights it by
//! r^(#i-rectangles) · s^(#k-rectangles), the number of ways to color it. The
//! full colored stream is available through [`enumerate_f_tilings`].

use std::fmt::Write as _;

use num_bigint::BigUint;
use num_traits::Zero;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::params::{check_index, Params, SeqIndex, MIN_INDEX};
use crate::sequence::{upow, SeqValue};

/// Kind of a piece, ignoring color.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Kind {
    Black,
    I,
    K,
}

/// A colored piece. Colors are 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Piece {
    BlackSquare,
    IRect(u32),
    KRect(u32),
}

impl Piece {
    pub fn kind(&self) -> Kind {
        match self {
            Piece::BlackSquare => Kind::Black,
            Piece::IRect(_) => Kind::I,
            Piece::KRect(_) => Kind::K,
        }
    }

    pub fn len(&self, p: &Params) -> usize {
        kind_len(self.kind(), p)
    }
}

fn kind_len(kind: Kind, p: &Params) -> usize {
    match kind {
        Kind::Black => 1,
        Kind::I => p.iu(),
        Kind::K => p.ku(),
    }
}

/// An ordered list of pieces covering a board of `board_len` cells.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Tiling {
    params: Params,
    pieces: Vec<Piece>,
    board_len: usize,
}

impl Tiling {
    /// Validates the covering, black placement and color bounds.
    pub fn new(params: Params, pieces: Vec<Piece>, board_len: usize) -> Result<Self> {
        let covered: usize = pieces.iter().map(|pc| pc.len(&params)).sum();
        if covered != board_len {
            return Err(Error::MalformedTiling(format!("pieces cover {covered} cells, board has {board_len}")));
        }
        let black_limit = params.min_step() as usize - 1;
        let mut cell = 0usize;
        for pc in &pieces {
            let ok = match *pc {
                Piece::BlackSquare => cell < black_limit,
                Piece::IRect(c) => (1..=params.r()).contains(&c),
                Piece::KRect(c) => (1..=params.s()).contains(&c),
            };
            if !ok {
                return Err(Error::MalformedTiling(format!("piece {pc:?} not allowed at cell {}", cell + 1)));
            }
            cell += pc.len(&params);
        }
        Ok(Self { params, pieces, board_len })
    }

    pub fn params(&self) -> &Params {
        &self.params
    }

    pub fn pieces(&self) -> &[Piece] {
        &self.pieces
    }

    pub fn board_len(&self) -> usize {
        self.board_len
    }

    fn kinds(&self) -> Vec<Kind> {
        self.pieces.iter().map(Piece::kind).collect()
    }
}

/// Lazily yields every composition of `len` into i- and k-parts, in
/// lexicographic order with the i-part tried first.
#[derive(Debug, Clone)]
struct ShapeIter {
    len: usize,
    i: usize,
    k: usize,
    stack: Vec<Kind>,
    filled: usize,
    started: bool,
    done: bool,
}

impl ShapeIter {
    fn new(len: usize, i: usize, k: usize) -> Self {
        Self { len, i, k, stack: Vec::new(), filled: 0, started: false, done: false }
    }

    fn part(&self, kind: Kind) -> usize {
        if kind == Kind::I {
            self.i
        } else {
            self.k
        }
    }

    /// Greedily extends the stack; true when it lands exactly on `len`.
    fn descend(&mut self) -> bool {
        loop {
            if self.filled == self.len {
                return true;
            }
            let next = if self.filled + self.i <= self.len {
                Kind::I
            } else if self.filled + self.k <= self.len {
                Kind::K
            } else {
                return false;
            };
            self.filled += self.part(next);
            self.stack.push(next);
        }
    }
}

impl Iterator for ShapeIter {
    type Item = Vec<Kind>;

    fn next(&mut self) -> Option<Vec<Kind>> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            if self.descend() {
                return Some(self.stack.clone());
            }
        }
        loop {
            let Some(last) = self.stack.pop() else {
                self.done = true;
                return None;
            };
            self.filled -= self.part(last);
            if last == Kind::I && self.filled + self.k <= self.len {
                self.stack.push(Kind::K);
                self.filled += self.k;
                if self.descend() {
                    return Some(self.stack.clone());
                }
            }
        }
    }
}

/// Odometer over the color vectors of one shape (last piece varies fastest).
struct ColorIter {
    params: Params,
    black: usize,
    shape: Vec<Kind>,
    colors: Vec<u32>,
    done: bool,
}

impl ColorIter {
    fn new(params: Params, black: usize, shape: Vec<Kind>) -> Self {
        let colors = vec![1; shape.len()];
        Self { params, black, shape, colors, done: false }
    }
}

impl Iterator for ColorIter {
    type Item = Vec<Piece>;

    fn next(&mut self) -> Option<Vec<Piece>> {
        if self.done {
            return None;
        }
        let mut pieces = vec![Piece::BlackSquare; self.black];
        pieces.extend(self.shape.iter().zip(&self.colors).map(|(kind, &c)| match kind {
            Kind::I => Piece::IRect(c),
            _ => Piece::KRect(c),
        }));
        // advance
        self.done = true;
        for slot in (0..self.shape.len()).rev() {
            let limit = if self.shape[slot] == Kind::I { self.params.r() } else { self.params.s() };
            if self.colors[slot] < limit {
                self.colors[slot] += 1;
                self.done = false;
                break;
            }
            self.colors[slot] = 1;
        }
        Some(pieces)
    }
}

fn board_len(n: SeqIndex) -> usize {
    (n + 1) as usize
}

fn max_black(p: &Params, len: usize) -> usize {
    (p.min_step() as usize - 1).min(len)
}

/// Every type-F tiling of the (n+1)-board, each exactly once, ordered by black
/// prefix length, then piece kinds (i before k), then colors.
pub fn enumerate_f_tilings(p: &Params, n: SeqIndex) -> Result<impl Iterator<Item = Tiling>> {
    check_index(n, MIN_INDEX)?;
    let params = *p;
    let len = board_len(n);
    Ok((0..=max_black(p, len)).flat_map(move |black| {
        ShapeIter::new(len - black, params.iu(), params.ku()).flat_map(move |shape| {
            ColorIter::new(params, black, shape).map(move |pieces| Tiling { params, pieces, board_len: len })
        })
    }))
}

/// Visits every shape of `len` cells; `stack` carries any fixed prefix.
fn visit_shapes(stack: &mut Vec<Kind>, remaining: usize, i: usize, k: usize, f: &mut impl FnMut(&[Kind])) {
    if remaining == 0 {
        f(stack);
        return;
    }
    for (kind, part) in [(Kind::I, i), (Kind::K, k)] {
        if part <= remaining {
            stack.push(kind);
            visit_shapes(stack, remaining - part, i, k, f);
            stack.pop();
        }
    }
}

/// Shape counts bucketed by (#i-rectangles, #k-rectangles).
#[derive(Debug, Default)]
struct Histogram(Vec<Vec<u64>>);

impl Histogram {
    fn add(&mut self, a: usize, b: usize) {
        if self.0.len() <= a {
            self.0.resize_with(a + 1, Vec::new);
        }
        if self.0[a].len() <= b {
            self.0[a].resize(b + 1, 0);
        }
        self.0[a][b] += 1;
    }

    fn merge(mut self, other: Histogram) -> Histogram {
        for (a, row) in other.0.into_iter().enumerate() {
            for (b, c) in row.into_iter().enumerate() {
                if c > 0 {
                    self.add(a, b);
                    self.0[a][b] += c - 1;
                }
            }
        }
        self
    }

    fn weigh(&self, p: &Params) -> SeqValue {
        let mut total = SeqValue::zero();
        for (a, row) in self.0.iter().enumerate() {
            for (b, &c) in row.iter().enumerate() {
                if c > 0 {
                    total += BigUint::from(c) * upow(p.r(), a as i64) * upow(p.s(), b as i64);
                }
            }
        }
        total
    }
}

fn count_parts(kinds: &[Kind]) -> (usize, usize) {
    kinds.iter().fold((0, 0), |(a, b), kind| match kind {
        Kind::I => (a + 1, b),
        Kind::K => (a, b + 1),
        Kind::Black => (a, b),
    })
}

/// Weighted count over all black prefixes, keeping shapes accepted by `keep`.
fn count_filtered(p: &Params, n: SeqIndex, keep: impl Fn(&[Kind]) -> bool + Sync) -> SeqValue {
    let len = board_len(n);
    let (i, k) = (p.iu(), p.ku());
    let hist = (0..=max_black(p, len))
        .into_par_iter()
        .map(|black| {
            let mut h = Histogram::default();
            let mut stack = vec![Kind::Black; black];
            visit_shapes(&mut stack, len - black, i, k, &mut |kinds| {
                if keep(kinds) {
                    let (a, b) = count_parts(kinds);
                    h.add(a, b);
                }
            });
            h
        })
        .reduce(Histogram::default, Histogram::merge);
    hist.weigh(p)
}

/// Number of type-F tilings of the (n+1)-board.
pub fn count_f_tilings(p: &Params, n: SeqIndex) -> Result<SeqValue> {
    check_index(n, MIN_INDEX)?;
    Ok(count_filtered(p, n, |_| true))
}

fn type_l_kinds(p: &Params, n: SeqIndex, kinds: &[Kind]) -> bool {
    let (i, k) = (p.ii(), p.ki());
    if n <= k - 2 {
        return true;
    }
    if n <= k + (k - 1) * i - 2 {
        return kinds.contains(&Kind::K);
    }
    let k = p.ku();
    let ends_with_i_tail = kinds.len() >= k - 1 && kinds[kinds.len() - (k - 1)..].iter().all(|&x| x == Kind::I);
    if ends_with_i_tail {
        return true;
    }
    if kinds.len() < k {
        return false;
    }
    let last = &kinds[kinds.len() - k..];
    let k_count = last.iter().filter(|&&x| x == Kind::K).count();
    let i_count = last.iter().filter(|&&x| x == Kind::I).count();
    k_count == 1 && i_count == k - 1 && last[0] != Kind::K
}

/// Type-L tail condition; requires k > i and a tiling of the (n+1)-board.
pub fn is_type_l(p: &Params, n: SeqIndex, t: &Tiling) -> Result<bool> {
    p.require_k_gt_i("type-L tilings")?;
    check_index(n, MIN_INDEX)?;
    if t.board_len() != board_len(n) {
        return Err(Error::MalformedTiling(format!(
            "board has {} cells, n = {n} needs {}",
            t.board_len(),
            board_len(n)
        )));
    }
    Ok(type_l_kinds(p, n, &t.kinds()))
}

/// Number of type-L tilings of the (n+1)-board; requires k > i.
pub fn count_l_tilings(p: &Params, n: SeqIndex) -> Result<SeqValue> {
    p.require_k_gt_i("type-L tilings")?;
    check_index(n, MIN_INDEX)?;
    let q = *p;
    Ok(count_filtered(p, n, move |kinds| type_l_kinds(&q, n, kinds)))
}

/// True iff some prefix of pieces covers exactly cells 1..=m.
pub fn is_breakable_at(t: &Tiling, m: usize) -> Result<bool> {
    if m == 0 || m > t.board_len() {
        return crate::error::hypothesis(format!("cell {m} outside 1..={}", t.board_len()));
    }
    let mut covered = 0usize;
    for pc in t.pieces() {
        covered += pc.len(t.params());
        if covered >= m {
            return Ok(covered == m);
        }
    }
    Ok(false)
}

/// One-line rendering: `#` per black square, `[i:c]` / `[k:c]` per rectangle.
pub fn render_tiling(t: &Tiling) -> String {
    let mut out = String::new();
    for pc in t.pieces() {
        match pc {
            Piece::BlackSquare => out.push('#'),
            Piece::IRect(c) => write!(out, "[i:{c}]").expect("string write"),
            Piece::KRect(c) => write!(out, "[k:{c}]").expect("string write"),
        }
    }
    out
}

/// A colored block of consecutive elements of X = {1, …, n+1}.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Block {
    pub start: usize,
    pub size: usize,
    pub color: u32,
}

/// Colored blocks of sizes i and k covering X from 1 upward, plus the
/// uncovered trailing elements (at most i - 1 of them).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ColorDecomposition {
    pub blocks: Vec<Block>,
    pub remainder: Vec<usize>,
}

fn require_decomposition(p: &Params, n: SeqIndex) -> Result<()> {
    p.require_k_gt_i("color decompositions")?;
    check_index(n, p.ii() - 1)
}

/// Walks the block-size sequences of X element by element; a branch closes
/// when fewer than i elements remain (they become the remainder).
fn visit_block_sizes(
    sizes: &mut Vec<usize>,
    next: usize,
    last: usize,
    i: usize,
    k: usize,
    f: &mut impl FnMut(&[usize]),
) {
    let remaining = last + 1 - next;
    if remaining < i {
        f(sizes);
        return;
    }
    for size in [i, k] {
        if size <= remaining {
            sizes.push(size);
            visit_block_sizes(sizes, next + size, last, i, k, f);
            sizes.pop();
        }
    }
}

/// Number of color decompositions with remainder at most i - 1 of
/// {1, …, n+1}; requires k > i ≥ 1 and n ≥ i - 1.
pub fn enumerate_color_decompositions(p: &Params, n: SeqIndex) -> Result<SeqValue> {
    require_decomposition(p, n)?;
    let (i, k) = (p.iu(), p.ku());
    let mut hist = Histogram::default();
    visit_block_sizes(&mut Vec::new(), 1, board_len(n), i, k, &mut |sizes| {
        let a = sizes.iter().filter(|&&z| z == i).count();
        hist.add(a, sizes.len() - a);
    });
    Ok(hist.weigh(p))
}

/// Materialized color decompositions, for small boards.
pub fn color_decompositions(p: &Params, n: SeqIndex) -> Result<Vec<ColorDecomposition>> {
    require_decomposition(p, n)?;
    let (i, k) = (p.iu(), p.ku());
    let last = board_len(n);
    let mut out = Vec::new();
    visit_block_sizes(&mut Vec::new(), 1, last, i, k, &mut |sizes| {
        let covered: usize = sizes.iter().sum();
        let remainder: Vec<usize> = (covered + 1..=last).collect();
        let kinds: Vec<Kind> = sizes.iter().map(|&z| if z == i { Kind::I } else { Kind::K }).collect();
        for colors in ColorIter::new(*p, 0, kinds) {
            let mut start = 1;
            let blocks = colors
                .iter()
                .zip(sizes)
                .map(|(pc, &size)| {
                    let color = match pc {
                        Piece::IRect(c) | Piece::KRect(c) => *c,
                        Piece::BlackSquare => unreachable!("no black squares in decompositions"),
                    };
                    let b = Block { start, size, color };
                    start += size;
                    b
                })
                .collect();
            out.push(ColorDecomposition { blocks, remainder: remainder.clone() });
        }
    });
    Ok(out)
}
