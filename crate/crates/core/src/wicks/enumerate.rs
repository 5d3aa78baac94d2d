use std::collections::{BTreeMap, BTreeSet};

use super::word::{CyclicWord, Sign, SignedLetter};
use super::{check_wicks, WicksError, WicksForm};
use crate::label::Label;

pub const MAX_ENUMERATION_LENGTH: usize = 10;

/// Representative of `w` up to rotation, renaming of letters and flipping
/// the sign of individual letters.
///
/// For each rotation letters are numbered by first appearance and flipped
/// so their first occurrence is positive; the least encoding wins.
pub fn canonical_form(w: &[SignedLetter]) -> Vec<(usize, Sign)> {
    let n = w.len();
    (0..n.max(1))
        .map(|r| {
            let mut ids: BTreeMap<&Label, (usize, Sign)> = BTreeMap::new();
            (0..n)
                .map(|i| {
                    let l = &w[(r + i) % n];
                    let next = ids.len();
                    let &mut (id, first_sign) = ids.entry(&l.base).or_insert((next, l.sign));
                    let sign = if l.sign == first_sign {
                        Sign::Plus
                    } else {
                        Sign::Minus
                    };
                    (id, sign)
                })
                .collect::<Vec<_>>()
        })
        .min()
        .unwrap_or_default()
}

/// Isomorphic in the sense of [`canonical_form`].
pub fn forms_isomorphic(a: &[SignedLetter], b: &[SignedLetter]) -> bool {
    a.len() == b.len() && canonical_form(a) == canonical_form(b)
}

fn letter_name(i: usize) -> Label {
    if i < 26 {
        Label::new(((b'a' + i as u8) as char).to_string())
    } else {
        Label::new(format!("l{i}"))
    }
}

fn decode(form: &[(usize, Sign)]) -> Vec<SignedLetter> {
    form.iter()
        .map(|&(id, sign)| SignedLetter {
            base: letter_name(id),
            sign,
        })
        .collect()
}

/// All oriented Wicks forms of length at most `max_length`, one per
/// isomorphism class, ordered by length and then canonical encoding.
/// Letters are named `a, b, c, ...` in order of first appearance.
pub fn enumerate_wicks(max_length: usize) -> Result<Vec<WicksForm>, WicksError> {
    if max_length > MAX_ENUMERATION_LENGTH {
        return Err(WicksError::LengthTooLarge(max_length));
    }
    let mut out = Vec::new();
    for e in 1..=max_length / 2 {
        let mut classes = BTreeSet::new();
        let mut slots = vec![None; 2 * e];
        matchings(&mut slots, 0, &mut |word| {
            let letters = decode(word);
            if check_wicks(&letters).is_ok() {
                classes.insert(canonical_form(&letters));
            }
        });
        for c in classes {
            let word = CyclicWord::new(decode(&c)).expect("nonempty");
            out.push(WicksForm::new(word)?);
        }
    }
    Ok(out)
}

/// Every way of pairing the positions, each pair holding one letter: the
/// first position of a pair positive, the second negative, letters numbered
/// by first position.
fn matchings(
    slots: &mut Vec<Option<(usize, Sign)>>,
    next_id: usize,
    visit: &mut dyn FnMut(&[(usize, Sign)]),
) {
    let Some(first) = slots.iter().position(Option::is_none) else {
        let word: Vec<(usize, Sign)> = slots.iter().map(|s| s.expect("filled")).collect();
        visit(&word);
        return;
    };
    slots[first] = Some((next_id, Sign::Plus));
    for j in first + 1..slots.len() {
        if slots[j].is_none() {
            slots[j] = Some((next_id, Sign::Minus));
            matchings(slots, next_id + 1, visit);
            slots[j] = None;
        }
    }
    slots[first] = None;
}

#[cfg(test)]
mod tests {
    use super::super::word::parse_word;
    use super::*;

    #[test]
    fn small_lengths() {
        assert!(enumerate_wicks(2).unwrap().is_empty());
        let four = enumerate_wicks(4).unwrap();
        assert_eq!(four.len(), 1);
        assert_eq!(four[0].to_string(), "a b a' b'");
        assert_eq!(four[0].genus(), 1);
        assert!(matches!(enumerate_wicks(12), Err(WicksError::LengthTooLarge(12))));
    }

    #[test]
    fn isomorphism_allows_renaming_and_sign_flips() {
        let a = parse_word("a b a' b'").unwrap();
        let b = parse_word("q p' q' p").unwrap();
        assert!(forms_isomorphic(&a, &b));
        let c = parse_word("a b c a' b' c'").unwrap();
        assert!(!forms_isomorphic(&a, &c));
    }

    /// Signed letters as `(letter, positive)`; a word is a sequence of them.
    type Brute = Vec<(usize, bool)>;

    fn brute_is_wicks(w: &[(usize, bool)]) -> bool {
        let n = w.len();
        let inv = |(l, p): (usize, bool)| (l, !p);
        (0..n).all(|i| {
            let (x, y) = (w[i], w[(i + 1) % n]);
            y != inv(x)
                && !(0..n).any(|j| w[j] == inv(y) && w[(j + 1) % n] == inv(x))
        })
    }

    /// Vertices of the glued surface: follow a corner to the corner after
    /// the partner of the next side.
    fn brute_vertices(w: &[(usize, bool)]) -> usize {
        let n = w.len();
        let mut seen = vec![false; n];
        let mut count = 0;
        for s in 0..n {
            if seen[s] {
                continue;
            }
            count += 1;
            let mut i = s;
            while !seen[i] {
                seen[i] = true;
                let nxt = (i + 1) % n;
                let partner = (0..n).find(|&j| j != nxt && w[j].0 == w[nxt].0).unwrap();
                i = partner;
            }
        }
        count
    }

    fn permutations(items: &mut Vec<(usize, bool)>, k: usize, visit: &mut dyn FnMut(&[(usize, bool)])) {
        if k == items.len() {
            visit(items);
            return;
        }
        for i in k..items.len() {
            items.swap(k, i);
            permutations(items, k + 1, visit);
            items.swap(k, i);
        }
    }

    /// Every image of `w` under rotation, renaming and sign flips.
    fn orbit(w: &[(usize, bool)], e: usize) -> Vec<Brute> {
        let mut names: Vec<usize> = (0..e).collect();
        let mut renamings = Vec::new();
        fn perms(v: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
            if k == v.len() {
                out.push(v.clone());
            }
            for i in k..v.len() {
                v.swap(k, i);
                perms(v, k + 1, out);
                v.swap(k, i);
            }
        }
        perms(&mut names, 0, &mut renamings);
        let n = w.len();
        let mut out = Vec::new();
        for r in 0..n {
            for rn in &renamings {
                for flips in 0..(1u32 << e) {
                    out.push(
                        (0..n)
                            .map(|i| {
                                let (l, p) = w[(r + i) % n];
                                (rn[l], p ^ (flips >> l & 1 == 1))
                            })
                            .collect(),
                    );
                }
            }
        }
        out
    }

    /// `(length, genus) -> number of classes` by exhaustive search.
    fn brute_counts(max: usize) -> BTreeMap<(usize, usize), usize> {
        let mut counts = BTreeMap::new();
        for e in 1..=max / 2 {
            let mut rest: Vec<(usize, bool)> = (0..e)
                .flat_map(|l| [(l, true), (l, false)])
                .filter(|&x| x != (0, true))
                .collect();
            let mut visited: BTreeSet<Brute> = BTreeSet::new();
            permutations(&mut rest, 0, &mut |tail| {
                let mut w = vec![(0, true)];
                w.extend_from_slice(tail);
                if visited.contains(&w) || !brute_is_wicks(&w) {
                    return;
                }
                let v = brute_vertices(&w);
                let g = (1 + e - v) / 2;
                *counts.entry((2 * e, g)).or_insert(0) += 1;
                visited.extend(orbit(&w, e));
            });
        }
        counts
    }

    #[test]
    fn enumeration_matches_brute_force() {
        let max = 8;
        let mut ours: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        for f in enumerate_wicks(max).unwrap() {
            assert!(f.within_length_bounds(), "{f}");
            *ours.entry((f.len(), f.genus())).or_insert(0) += 1;
        }
        let brute = brute_counts(max);
        assert_eq!(ours, brute);
        let frozen: BTreeMap<(usize, usize), usize> =
            [((4, 1), 1), ((6, 1), 1), ((8, 2), 4)].into_iter().collect();
        assert_eq!(ours, frozen);
    }

    #[test]
    fn length_ten_matches_brute_force() {
        let mut ours: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        for f in enumerate_wicks(10).unwrap() {
            assert!(f.within_length_bounds(), "{f}");
            *ours.entry((f.len(), f.genus())).or_insert(0) += 1;
        }
        assert_eq!(ours, brute_counts(10));
        assert_eq!(ours.get(&(10, 2)), Some(&21));
        assert_eq!(ours.len(), 4);
    }
}
