//! Isomorphism testing and classification.
//!
//! Two structures are isomorphic when some bijection of the underlying
//! set carries both operation tables onto each other.  Small orders use a
//! canonical form (minimum relabeling under all permutations); larger
//! orders fall back to invariant bucketing plus a pairwise backtracking
//! search that returns a witnessing bijection.

use super::{Biquasile, Elt};
use std::collections::BTreeMap;

/// A witnessing bijection between two biquasiles of equal order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BiquasileMap {
    pub map: Vec<Elt>,
}

impl BiquasileMap {
    /// Check the homomorphism condition against explicit source/target.
    pub fn is_homomorphism(&self, x: &Biquasile, y: &Biquasile) -> bool {
        let n = x.order() as Elt;
        if y.order() != x.order() || self.map.len() != x.order() {
            return false;
        }
        for u in 0..n {
            for v in 0..n {
                if self.map[x.star(u, v) as usize] != y.star(self.map[u as usize], self.map[v as usize]) {
                    return false;
                }
                if self.map[x.dot(u, v) as usize] != y.dot(self.map[u as usize], self.map[v as usize]) {
                    return false;
                }
            }
        }
        true
    }

    pub fn is_bijection(&self) -> bool {
        let mut seen = vec![false; self.map.len()];
        for &v in &self.map {
            if (v as usize) >= self.map.len() || seen[v as usize] {
                return false;
            }
            seen[v as usize] = true;
        }
        true
    }
}

fn permutations(n: usize) -> Vec<Vec<Elt>> {
    let mut out = Vec::new();
    let mut cur: Vec<Elt> = (0..n as Elt).collect();
    fn heap(k: usize, cur: &mut Vec<Elt>, out: &mut Vec<Vec<Elt>>) {
        if k == 1 {
            out.push(cur.clone());
            return;
        }
        for i in 0..k {
            heap(k - 1, cur, out);
            if k % 2 == 0 {
                cur.swap(i, k - 1);
            } else {
                cur.swap(0, k - 1);
            }
        }
    }
    heap(n, &mut cur, &mut out);
    out.sort();
    out
}

/// Minimal concatenated star/dot table over all relabelings.
/// Ties are broken by the lexicographic order of that concatenation.
pub fn canonical_form(x: &Biquasile) -> (Vec<Elt>, Vec<Elt>) {
    let n = x.order();
    let mut best: Option<(Vec<Elt>, Vec<Elt>)> = None;
    for perm in permutations(n) {
        let y = x.relabeled(&perm);
        let key = y.lex_key();
        if best.as_ref().map_or(true, |b| key < *b) {
            best = Some(key);
        }
    }
    best.unwrap()
}

/// Conjugation-invariant fingerprint used to bucket before pairwise search.
fn fingerprint(x: &Biquasile) -> Vec<Vec<u8>> {
    let n = x.order();
    let cycle_type = |perm: &dyn Fn(Elt) -> Elt| -> Vec<u8> {
        let mut seen = vec![false; n];
        let mut lens = Vec::new();
        for s in 0..n as Elt {
            if seen[s as usize] {
                continue;
            }
            let mut len = 0u8;
            let mut t = s;
            while !seen[t as usize] {
                seen[t as usize] = true;
                len += 1;
                t = perm(t);
            }
            lens.push(len);
        }
        lens.sort();
        lens
    };
    let mut per_elt: Vec<Vec<u8>> = (0..n as Elt)
        .map(|i| {
            let mut v = Vec::new();
            v.extend(cycle_type(&|t| x.star(i, t)));
            v.push(255);
            v.extend(cycle_type(&|t| x.star(t, i)));
            v.push(255);
            v.extend(cycle_type(&|t| x.dot(i, t)));
            v.push(255);
            v.extend(cycle_type(&|t| x.dot(t, i)));
            v
        })
        .collect();
    per_elt.sort();
    per_elt.push(cycle_type(&|t| x.star(t, t)));
    per_elt.push(cycle_type(&|t| x.dot(t, t)));
    per_elt
}

/// Search for an isomorphism, assigning images in order with forced
/// propagation through both operations.
pub fn is_isomorphic(x: &Biquasile, y: &Biquasile) -> Option<BiquasileMap> {
    if x.order() != y.order() {
        return None;
    }
    let n = x.order();
    let mut map = vec![u8::MAX; n];
    let mut used = vec![false; n];
    if search(x, y, &mut map, &mut used) {
        let m = BiquasileMap { map };
        debug_assert!(m.is_bijection() && m.is_homomorphism(x, y));
        Some(m)
    } else {
        None
    }
}

fn search(x: &Biquasile, y: &Biquasile, map: &mut Vec<Elt>, used: &mut Vec<bool>) -> bool {
    let n = x.order();
    let next = match map.iter().position(|&v| v == u8::MAX) {
        None => return true,
        Some(i) => i as Elt,
    };
    for img in 0..n as Elt {
        if used[img as usize] {
            continue;
        }
        let mut trail: Vec<Elt> = Vec::new();
        if assign(x, y, next, img, map, used, &mut trail) && propagate(x, y, map, used, &mut trail)
        {
            if search(x, y, map, used) {
                return true;
            }
        }
        for g in trail {
            used[map[g as usize] as usize] = false;
            map[g as usize] = u8::MAX;
        }
    }
    false
}

fn assign(
    _x: &Biquasile,
    _y: &Biquasile,
    g: Elt,
    img: Elt,
    map: &mut [Elt],
    used: &mut [bool],
    trail: &mut Vec<Elt>,
) -> bool {
    if map[g as usize] != u8::MAX {
        return map[g as usize] == img;
    }
    if used[img as usize] {
        return false;
    }
    map[g as usize] = img;
    used[img as usize] = true;
    trail.push(g);
    true
}

/// Close the partial map under products: whenever f(u), f(v) are known,
/// f(u*v) and f(u.v) are forced.
fn propagate(
    x: &Biquasile,
    y: &Biquasile,
    map: &mut [Elt],
    used: &mut [bool],
    trail: &mut Vec<Elt>,
) -> bool {
    let n = x.order() as Elt;
    loop {
        let mut changed = false;
        for u in 0..n {
            if map[u as usize] == u8::MAX {
                continue;
            }
            for v in 0..n {
                if map[v as usize] == u8::MAX {
                    continue;
                }
                let (fu, fv) = (map[u as usize], map[v as usize]);
                for (src, dst) in [
                    (x.star(u, v), y.star(fu, fv)),
                    (x.dot(u, v), y.dot(fu, fv)),
                ] {
                    let cur = map[src as usize];
                    if cur == u8::MAX {
                        if used[dst as usize] {
                            return false;
                        }
                        map[src as usize] = dst;
                        used[dst as usize] = true;
                        trail.push(src);
                        changed = true;
                    } else if cur != dst {
                        return false;
                    }
                }
            }
        }
        if !changed {
            return true;
        }
    }
}

/// Partition into isomorphism classes; returns (classes as index lists,
/// stable under permutations of the input up to class order).
pub fn iso_classes(structures: &[Biquasile]) -> Vec<Vec<usize>> {
    if structures.is_empty() {
        return Vec::new();
    }
    let n = structures[0].order();
    assert!(structures.iter().all(|x| x.order() == n));
    if n <= 5 {
        let mut groups: BTreeMap<(Vec<Elt>, Vec<Elt>), Vec<usize>> = BTreeMap::new();
        for (i, x) in structures.iter().enumerate() {
            groups.entry(canonical_form(x)).or_default().push(i);
        }
        let mut classes: Vec<Vec<usize>> = groups.into_values().collect();
        classes.sort_by_key(|c| c[0]);
        classes
    } else {
        let mut buckets: BTreeMap<Vec<Vec<u8>>, Vec<usize>> = BTreeMap::new();
        for (i, x) in structures.iter().enumerate() {
            buckets.entry(fingerprint(x)).or_default().push(i);
        }
        let mut class_of: Vec<usize> = (0..structures.len()).collect();
        for members in buckets.values() {
            for (ai, &a) in members.iter().enumerate() {
                if class_of[a] != a {
                    continue;
                }
                for &b in &members[ai + 1..] {
                    if class_of[b] != b {
                        continue;
                    }
                    if is_isomorphic(&structures[a], &structures[b]).is_some() {
                        class_of[b] = a;
                    }
                }
            }
        }
        let mut map: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (i, &c) in class_of.iter().enumerate() {
            map.entry(c).or_default().push(i);
        }
        map.into_values().collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::enumerate_biquasiles;

    #[test]
    fn order_two_classes() {
        let two = enumerate_biquasiles(2, None).unwrap().structures;
        let classes = iso_classes(&two);
        assert_eq!(classes.len(), 2);
        // {X1, X4} and {X2, X3} in enumeration order
        assert_eq!(classes, vec![vec![0, 3], vec![1, 2]]);
        let w = is_isomorphic(&two[0], &two[3]).expect("X1 iso X4");
        assert!(w.is_homomorphism(&two[0], &two[3]));
        assert!(is_isomorphic(&two[0], &two[1]).is_none());
    }

    #[test]
    fn identity_witness() {
        let two = enumerate_biquasiles(2, None).unwrap().structures;
        let w = is_isomorphic(&two[1], &two[1]).unwrap();
        assert_eq!(w.map, vec![0, 1]);
    }

    #[test]
    fn order_three_classes() {
        let three = enumerate_biquasiles(3, None).unwrap().structures;
        assert_eq!(iso_classes(&three).len(), 19);
    }

    #[test]
    fn classes_stable_under_shuffle() {
        let three = enumerate_biquasiles(3, None).unwrap().structures;
        let mut shuffled = three.clone();
        shuffled.reverse();
        shuffled.rotate_left(17);
        assert_eq!(iso_classes(&shuffled).len(), 19);
    }

    #[test]
    fn bucketed_path_matches_canonical_path() {
        // order-3 structures forced through the pairwise fallback must
        // agree with the canonical-form classification
        let three = enumerate_biquasiles(3, None).unwrap().structures;
        let canonical = iso_classes(&three).len();
        let mut buckets: BTreeMap<Vec<Vec<u8>>, Vec<usize>> = BTreeMap::new();
        for (i, x) in three.iter().enumerate() {
            buckets.entry(super::fingerprint(x)).or_default().push(i);
        }
        let mut class_of: Vec<usize> = (0..three.len()).collect();
        for members in buckets.values() {
            for (ai, &a) in members.iter().enumerate() {
                if class_of[a] != a {
                    continue;
                }
                for &b in &members[ai + 1..] {
                    if class_of[b] == b && is_isomorphic(&three[a], &three[b]).is_some() {
                        class_of[b] = a;
                    }
                }
            }
        }
        let distinct = class_of
            .iter()
            .enumerate()
            .filter(|(i, &c)| *i == c)
            .count();
        assert_eq!(distinct, canonical);
    }
}
