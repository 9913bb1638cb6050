//! Boolean algebra of finite unions of prefix cells (cylinders in a tree of
//! words). Shared by the path-space and n-adic models.

use super::{Space, Word};
use crate::error::{Error, Result};

fn is_prefix(p: &[u32], w: &[u32]) -> bool {
    w.starts_with(p)
}

/// Sorted antichain: drops duplicates and cells covered by a shorter prefix.
fn antichain(mut words: Vec<Word>) -> Vec<Word> {
    words.sort();
    words.dedup();
    let mut out: Vec<Word> = Vec::with_capacity(words.len());
    for w in words {
        // Extensions of a word sort directly after it, so only the last kept
        // word can cover `w`.
        if out.last().is_some_and(|last| is_prefix(last, &w)) {
            continue;
        }
        out.push(w);
    }
    out
}

pub(super) fn normalize(space: &Space, words: Vec<Word>) -> Vec<Word> {
    let cells = antichain(words);
    let mut root = Vec::new();
    merge(space, &mut root, &cells)
}

/// `cells` is a sorted antichain of words extending `node`.
fn merge(space: &Space, node: &mut Word, cells: &[Word]) -> Vec<Word> {
    if cells.is_empty() {
        return Vec::new();
    }
    if cells.len() == 1 && cells[0].len() == node.len() {
        return vec![node.clone()];
    }
    let mut out = Vec::new();
    let mut full = true;
    for letter in space.children(node) {
        node.push(letter);
        let lo = cells.partition_point(|c| c.as_slice() < node.as_slice());
        let hi = lo + cells[lo..].partition_point(|c| is_prefix(node, c));
        let part = merge(space, node, &cells[lo..hi]);
        full &= part.len() == 1 && part[0] == *node;
        out.extend(part);
        node.pop();
    }
    if full {
        vec![node.clone()]
    } else {
        out
    }
}

pub(super) fn intersect(space: &Space, a: &[&Word], b: &[&Word]) -> Vec<Word> {
    let mut out = Vec::new();
    for x in a {
        for y in b {
            if is_prefix(x, y) {
                out.push((*y).clone());
            } else if is_prefix(y, x) {
                out.push((*x).clone());
            }
        }
    }
    normalize(space, out)
}

pub(super) fn complement(space: &Space, cells: &[Word]) -> Result<Vec<Word>> {
    let cells = antichain(cells.to_vec());
    let mut out = Vec::new();
    let mut root = Vec::new();
    complement_under(space, &mut root, &cells, &mut out)?;
    Ok(normalize(space, out))
}

fn complement_under(space: &Space, node: &mut Word, cells: &[Word], out: &mut Vec<Word>) -> Result<()> {
    if cells.is_empty() {
        out.push(node.clone());
        return space.budget(out.len());
    }
    if cells.len() == 1 && cells[0].len() == node.len() {
        return Ok(());
    }
    for letter in space.children(node) {
        node.push(letter);
        let lo = cells.partition_point(|c| c.as_slice() < node.as_slice());
        let hi = lo + cells[lo..].partition_point(|c| is_prefix(node, c));
        complement_under(space, node, &cells[lo..hi], out)?;
        node.pop();
    }
    Ok(())
}

pub(super) fn refine(space: &Space, cells: &[Word], depth: usize) -> Result<Vec<Word>> {
    let mut out = Vec::new();
    for w in cells {
        if w.len() > depth {
            return Err(Error::InvalidLevel(format!("cell of depth {} cannot be refined to depth {depth}", w.len())));
        }
        let mut node = w.clone();
        expand(space, &mut node, depth, &mut out)?;
    }
    out.sort();
    Ok(out)
}

fn expand(space: &Space, node: &mut Word, depth: usize, out: &mut Vec<Word>) -> Result<()> {
    if node.len() == depth {
        out.push(node.clone());
        return space.budget(out.len());
    }
    for letter in space.children(node) {
        node.push(letter);
        expand(space, node, depth, out)?;
        node.pop();
    }
    Ok(())
}
