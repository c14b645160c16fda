use std::collections::{HashSet, VecDeque};

use crate::tableaux::Word;

/// Words reachable from `w` by one local plactic move.
fn neighbours(w: &[u32]) -> Vec<Word> {
    let mut out = Vec::new();
    for j in 0..w.len().saturating_sub(1) {
        let (a, b) = (w[j], w[j + 1]);
        if a.abs_diff(b) >= 2 {
            let mut v = w.to_vec();
            v.swap(j, j + 1);
            out.push(v);
        }
    }
    for j in 0..w.len().saturating_sub(2) {
        let t = [w[j], w[j + 1], w[j + 2]];
        let image = match t {
            // i (i+1) i ↔ (i+1) i i
            [a, b, c] if b == a + 1 && c == a => Some([b, a, a]),
            [b, a, c] if b == a + 1 && c == a => Some([a, b, a]),
            // (i+1) i (i+1) ↔ (i+1) (i+1) i
            [b, a, c] if b == a + 1 && c == b => Some([b, b, a]),
            [b, c, a] if b == c && b == a + 1 => Some([b, a, b]),
            _ => None,
        };
        if let Some(img) = image {
            let mut v = w.to_vec();
            v[j..j + 3].copy_from_slice(&img);
            out.push(v);
        }
    }
    out
}

/// Whether two words are equal in the local plactic algebra, by breadth-first
/// search from `w1`. Returns `None` if more than `budget` words would be visited.
pub fn plactic_equivalent(w1: &[u32], w2: &[u32], budget: usize) -> Option<bool> {
    let sorted = |w: &[u32]| {
        let mut v = w.to_vec();
        v.sort_unstable();
        v
    };
    if sorted(w1) != sorted(w2) {
        return Some(false);
    }
    let mut seen: HashSet<Word> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(w1.to_vec());
    queue.push_back(w1.to_vec());
    while let Some(w) = queue.pop_front() {
        if w == w2 {
            return Some(true);
        }
        for v in neighbours(&w) {
            if !seen.contains(&v) {
                if seen.len() >= budget {
                    return None;
                }
                seen.insert(v.clone());
                queue.push_back(v);
            }
        }
    }
    Some(false)
}
