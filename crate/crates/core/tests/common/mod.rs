//! Explicit decision-tree enumerators shared by the oracle tests.
#![allow(dead_code)]

use num_bigint::BigUint;
use slicelab::slice::SubsetMask;

/// Table (bit r = value on the r-th element) of every tree of height at most
/// `h` that never repeats a position on a path, with its height. Leaves may
/// appear anywhere.
pub fn all_trees(elements: &[SubsetMask], free: u64, h: u32) -> Vec<(u32, u64)> {
    let all = (1u64 << elements.len()) - 1;
    let mut out = vec![(0, 0), (0, all)];
    if h == 0 {
        return out;
    }
    for p in (1..=64).filter(|p| free >> (p - 1) & 1 == 1) {
        let sub = all_trees(elements, free & !(1 << (p - 1)), h - 1);
        let yes_mask: u64 = elements
            .iter()
            .enumerate()
            .filter(|(_, e)| e.contains(p))
            .fold(0, |m, (i, _)| m | 1 << i);
        for &(h0, t0) in &sub {
            for &(h1, t1) in &sub {
                out.push((1 + h0.max(h1), (t0 & !yes_mask) | (t1 & yes_mask)));
            }
        }
    }
    out
}

/// Trees in the counting model, by brute force over explicit element lists:
/// a node is a leaf iff one element remains or the height is used up.
pub fn count_full(elements: &[SubsetMask], free: u64, h: u32) -> BigUint {
    if elements.len() == 1 || h == 0 {
        return BigUint::from(2u32);
    }
    let mut total = BigUint::from(0u32);
    for p in (1..=64).filter(|p| free >> (p - 1) & 1 == 1) {
        let (yes, no): (Vec<SubsetMask>, Vec<SubsetMask>) =
            elements.iter().partition(|e| e.contains(p));
        let rest = free & !(1 << (p - 1));
        total += count_full(&no, rest, h - 1) * count_full(&yes, rest, h - 1);
    }
    total
}

/// Tables computed by some tree of height at most `h` over the `free`
/// positions, built level by level from explicit trees and deduplicated.
pub fn computable_tables(
    elements: &[SubsetMask],
    free: u64,
    h: u32,
) -> std::collections::HashSet<u64> {
    let all = (1u64 << elements.len()) - 1;
    let mut out: std::collections::HashSet<u64> = [0, all].into();
    if h == 0 {
        return out;
    }
    for p in (1..=64).filter(|p| free >> (p - 1) & 1 == 1) {
        let sub = computable_tables(elements, free & !(1 << (p - 1)), h - 1);
        let yes_mask: u64 = elements
            .iter()
            .enumerate()
            .filter(|(_, e)| e.contains(p))
            .fold(0, |m, (i, _)| m | 1 << i);
        for &t0 in &sub {
            for &t1 in &sub {
                out.insert((t0 & !yes_mask) | (t1 & yes_mask));
            }
        }
    }
    out
}
