use std::collections::BTreeMap;

use thiserror::Error;

use crate::banded::{BandedUnlink, Side};
use crate::braid::BraidWord;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GroupError {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("enumeration exceeds the brute-force feasibility bound")]
    TooLarge,
}

/// Finite presentation; relators are words over generators 1..=g, a negative
/// letter meaning the inverse generator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupPresentation {
    generators: usize,
    relators: Vec<Vec<i32>>,
}

impl GroupPresentation {
    pub fn new(generators: usize, relators: Vec<Vec<i32>>) -> Result<Self, GroupError> {
        for r in &relators {
            for &x in r {
                if x == 0 || x.unsigned_abs() as usize > generators {
                    return Err(GroupError::InvalidInput(format!(
                        "relator letter {x} outside 1..={generators}"
                    )));
                }
            }
        }
        Ok(GroupPresentation { generators, relators })
    }

    pub fn generators(&self) -> usize {
        self.generators
    }

    pub fn relators(&self) -> &[Vec<i32>] {
        &self.relators
    }

    pub fn emit_text(&self) -> String {
        let mut out = format!("gens {}\n", self.generators);
        for r in &self.relators {
            let body: Vec<String> = r.iter().map(|x| x.to_string()).collect();
            out.push_str("rel ");
            out.push_str(&body.join(" "));
            out.push('\n');
        }
        out
    }

    pub fn parse_text(text: &str) -> Result<Self, GroupError> {
        let mut generators: Option<usize> = None;
        let mut relators = Vec::new();
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            if let Some(rest) = line.strip_prefix("gens ") {
                let g = rest
                    .trim()
                    .parse::<usize>()
                    .map_err(|_| GroupError::InvalidInput(format!("bad gens line: {line}")))?;
                generators = Some(g);
            } else if let Some(rest) = line.strip_prefix("rel") {
                let mut word = Vec::new();
                for tok in rest.split_whitespace() {
                    let x = tok
                        .parse::<i32>()
                        .map_err(|_| GroupError::InvalidInput(format!("bad relator token: {tok}")))?;
                    word.push(x);
                }
                relators.push(word);
            } else {
                return Err(GroupError::InvalidInput(format!("unrecognized line: {line}")));
            }
        }
        let g = generators.ok_or_else(|| GroupError::InvalidInput("missing gens line".into()))?;
        GroupPresentation::new(g, relators)
    }
}

/// Invariant factors d1 | d2 | ... of the abelianization, plus free rank.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbelianInvariants {
    pub free_rank: usize,
    pub torsion: Vec<u64>,
}

fn reduce(w: &[i32]) -> Vec<i32> {
    let mut out: Vec<i32> = Vec::with_capacity(w.len());
    for &x in w {
        if out.last() == Some(&-x) {
            out.pop();
        } else {
            out.push(x);
        }
    }
    out
}

fn inv(w: &[i32]) -> Vec<i32> {
    w.iter().rev().map(|&x| -x).collect()
}

/// o^exp . w . o^-exp, freely reduced; exp is +-1.
fn conj(o: &[i32], exp: i32, w: &[i32]) -> Vec<i32> {
    let (head, tail) = if exp > 0 { (o.to_vec(), inv(o)) } else { (inv(o), o.to_vec()) };
    let mut t = head;
    t.extend_from_slice(w);
    t.extend_from_slice(&tail);
    reduce(&t)
}

/// Replaces some relation by a strictly shorter one using an occurrence of
/// more than half of another relation; returns whether anything changed.
fn shorten_once(rels: &mut [Vec<i32>]) -> bool {
    for i in 0..rels.len() {
        for j in 0..rels.len() {
            if i == j || rels[j].len() < 2 {
                continue;
            }
            let r = rels[j].clone();
            let half = r.len() / 2 + 1;
            for base in [r.clone(), inv(&r)] {
                for rot in 0..base.len() {
                    let mut u = base[rot..].to_vec();
                    u.extend_from_slice(&base[..rot]);
                    let piece = &u[..half];
                    let rest = inv(&u[half..]);
                    let s = rels[i].clone();
                    if s.len() < half {
                        continue;
                    }
                    for at in 0..=s.len() - half {
                        if &s[at..at + half] == piece {
                            let mut t = s[..at].to_vec();
                            t.extend_from_slice(&rest);
                            t.extend_from_slice(&s[at + half..]);
                            let t = reduce(&t);
                            if t.len() < s.len() {
                                rels[i] = t;
                                return true;
                            }
                        }
                    }
                }
            }
        }
    }
    false
}

/// Meridian data at the bridge equator: one word per puncture over the
/// surviving component generators, plus the strand's vertical direction there.
struct PlatMeridians {
    components: usize,
    equator: Vec<(Vec<i32>, i8)>,
    leftover: Vec<Vec<i32>>,
}

/// Bottom-up Wirtinger propagation through the plat closure of `word`, with
/// the equator snapshot taken after the first `split` letters. Bottom caps
/// seed one symbol each; top caps yield relations between conjugates. When
/// `eliminate` is set, cap relations are used to express redundant symbols,
/// leaving one generator per component; relations that survive elimination
/// are returned in `leftover`.
fn plat_meridians(
    word: &BraidWord,
    split: usize,
    eliminate: bool,
) -> Result<PlatMeridians, GroupError> {
    let n = word.strands();
    if n % 2 != 0 {
        return Err(GroupError::InvalidInput(format!("odd strand count {n}")));
    }
    let b = n / 2;
    // connectivity pass: track bottom-cap ends to the top caps
    let mut label: Vec<(usize, usize)> = (0..n).map(|i| (i / 2, i % 2)).collect();
    for &k in word.letters() {
        let a = k.unsigned_abs() as usize - 1;
        label.swap(a, a + 1);
    }
    // top cap j links the two bottom-cap ends arriving at positions 2j, 2j+1
    let mut top_link: BTreeMap<(usize, usize), (usize, usize)> = BTreeMap::new();
    for j in 0..b {
        top_link.insert(label[2 * j], label[2 * j + 1]);
        top_link.insert(label[2 * j + 1], label[2 * j]);
    }
    // orient each component circle; dir[cap][end] = +1 for upward
    let mut dir_of_end: Vec<[i8; 2]> = vec![[0, 0]; b];
    let mut comp_of_cap: Vec<usize> = vec![usize::MAX; b];
    let mut components = 0usize;
    for start in 0..b {
        if comp_of_cap[start] != usize::MAX {
            continue;
        }
        let comp = components;
        components += 1;
        let mut end = (start, 0usize);
        loop {
            comp_of_cap[end.0] = comp;
            dir_of_end[end.0][end.1] = 1;
            let arrive = top_link[&end];
            dir_of_end[arrive.0][arrive.1] = -1;
            end = (arrive.0, 1 - arrive.1);
            if end == (start, 0) {
                break;
            }
        }
    }
    // Wirtinger pass: per position a meridian word and strand direction
    let mut state: Vec<(Vec<i32>, i8)> = (0..n)
        .map(|i| (vec![(i / 2 + 1) as i32], dir_of_end[i / 2][i % 2]))
        .collect();
    let mut equator: Vec<(Vec<i32>, i8)> = Vec::new();
    for (idx, &k) in word.letters().iter().enumerate() {
        if idx == split {
            equator = state.clone();
        }
        let a = k.unsigned_abs() as usize - 1;
        let s: i32 = if k > 0 { 1 } else { -1 };
        // positive letter: the strand entering bottom-left passes over
        let (over, under) = if k > 0 { (a, a + 1) } else { (a + 1, a) };
        let exp = s * state[over].1 as i32;
        state[under].0 = conj(&state[over].0.clone(), exp, &state[under].0);
        state.swap(a, a + 1);
    }
    if word.letters().len() == split {
        equator = state.clone();
    }
    // top caps: both ends of a cap arc carry the same meridian
    let mut relations: Vec<Vec<i32>> = Vec::new();
    for j in 0..b {
        let mut r = state[2 * j].0.clone();
        r.extend(inv(&state[2 * j + 1].0));
        relations.push(reduce(&r));
    }
    if !eliminate {
        return Ok(PlatMeridians { components, equator, leftover: relations });
    }
    // eliminate symbols defined by a cap relation, fully expanding substitutions
    let mut subs: BTreeMap<i32, Vec<i32>> = BTreeMap::new();
    let apply = |subs: &BTreeMap<i32, Vec<i32>>, w: &[i32]| -> Vec<i32> {
        let mut out = Vec::with_capacity(w.len());
        for &x in w {
            match subs.get(&x.abs()) {
                Some(rhs) if x > 0 => out.extend_from_slice(rhs),
                Some(rhs) => out.extend(inv(rhs)),
                None => out.push(x),
            }
        }
        reduce(&out)
    };
    loop {
        for r in relations.iter_mut() {
            *r = cyclic_reduce(&apply(&subs, r));
        }
        relations.retain(|r| !r.is_empty());
        let mut pick: Option<(usize, i32, Vec<i32>)> = None;
        'scan: for (ri, r) in relations.iter().enumerate() {
            for (i, &x) in r.iter().enumerate() {
                let y = x.abs();
                if r.iter().filter(|&&z| z.abs() == y).count() == 1 {
                    // r = p y^s q, so y^s = p^-1 q^-1
                    let mut rhs: Vec<i32> = inv(&r[..i]);
                    rhs.extend(inv(&r[i + 1..]));
                    let rhs = if x > 0 { reduce(&rhs) } else { inv(&reduce(&rhs)) };
                    pick = Some((ri, y, rhs));
                    break 'scan;
                }
            }
        }
        let Some((ri, y, rhs)) = pick else {
            // no relation isolates a symbol; shorten one relation by another
            if shorten_once(&mut relations) {
                continue;
            }
            break;
        };
        relations.remove(ri);
        for other in subs.values_mut() {
            let one = BTreeMap::from([(y, rhs.clone())]);
            *other = apply(&one, other);
        }
        subs.insert(y, rhs);
    }
    let survivors: Vec<i32> = (1..=b as i32).filter(|s| !subs.contains_key(s)).collect();
    let renum: BTreeMap<i32, i32> =
        survivors.iter().enumerate().map(|(i, &s)| (s, i as i32 + 1)).collect();
    let remap = |w: &[i32]| -> Vec<i32> {
        apply(&subs, w).iter().map(|&x| renum[&x.abs()] * x.signum()).collect()
    };
    let equator = equator.iter().map(|(w, d)| (remap(w), *d)).collect();
    let leftover = relations.iter().map(|r| remap(r)).collect();
    if survivors.len() != components {
        return Err(GroupError::InvalidInput(format!(
            "{} meridian symbols survive elimination for {} components",
            survivors.len(),
            components
        )));
    }
    Ok(PlatMeridians { components, equator, leftover })
}

/// Wirtinger presentation of the plat closure of `word`: one generator per
/// bottom bridge, one relation per top bridge.
pub fn presentation_from_plat(word: &BraidWord) -> Result<GroupPresentation, GroupError> {
    let m = plat_meridians(word, word.letters().len(), false)?;
    GroupPresentation::new(word.strands() / 2, m.leftover)
}

/// Presentation of the surface-complement group from a banded unlink: one
/// generator per component of the unlink, one relator per band. The band
/// relator transports the lower foot's meridian along the core, conjugating
/// by the meridian of every strand passed under, and equates it with the
/// upper foot's meridian, inverted when the feet directions agree (the band
/// then attaches reversing orientation). Caps contribute no relators.
pub fn presentation_from_banded(bl: &BandedUnlink) -> Result<GroupPresentation, GroupError> {
    let word = bl
        .word12()
        .concat(&bl.word31().mirror_reverse())
        .map_err(|e| GroupError::InvalidInput(e.to_string()))?;
    let m = plat_meridians(&word, bl.word12().letters().len(), true)?;
    for r in &m.leftover {
        if !r.is_empty() {
            return Err(GroupError::InvalidInput(
                "underlying link is not an unlink in free reduction".into(),
            ));
        }
    }
    let mut relators = Vec::new();
    for band in bl.bands() {
        let (mu_lo, d_lo) = m.equator[band.lo() - 1].clone();
        let (mu_hi, d_hi) = m.equator[band.hi() - 1].clone();
        // transport west to east; an under-passed strand of direction d
        // crosses the eastward core with sign -d
        let mut transported = mu_lo;
        for &(c, side) in band.bypasses() {
            if side == Side::Under {
                let (mu_c, d_c) = &m.equator[c - 1];
                transported = conj(mu_c, -(*d_c as i32), &transported);
            }
        }
        let e: i32 = if d_lo == d_hi { -1 } else { 1 };
        let target = if e > 0 { mu_hi } else { inv(&mu_hi) };
        let mut r = transported;
        r.extend(inv(&target));
        relators.push(reduce(&r));
    }
    GroupPresentation::new(m.components, relators)
}

fn cyclic_reduce(w: &[i32]) -> Vec<i32> {
    let mut w = reduce(w);
    while w.len() >= 2 && w[0] == -w[w.len() - 1] {
        w = w[1..w.len() - 1].to_vec();
    }
    w
}

/// Least representative among all rotations of the relator and its inverse.
fn canonical_relator(w: &[i32]) -> Vec<i32> {
    let w = cyclic_reduce(w);
    if w.is_empty() {
        return w;
    }
    let mut best: Option<Vec<i32>> = None;
    for base in [w.clone(), inv(&w)] {
        for i in 0..base.len() {
            let mut rot = base[i..].to_vec();
            rot.extend_from_slice(&base[..i]);
            if best.as_ref().is_none_or(|b| rot < *b) {
                best = Some(rot);
            }
        }
    }
    best.unwrap()
}

/// Deterministic Tietze simplification: free and cyclic reduction, duplicate
/// removal, length-reducing relator substitution, and elimination of any
/// generator a relator defines. Stops at a fixpoint or when the budget of
/// rewrite steps runs out.
pub fn tietze_simplify(p: &GroupPresentation, budget: usize) -> GroupPresentation {
    let mut gens = p.generators;
    let mut rels: Vec<Vec<i32>> = p.relators.clone();
    let mut steps = 0usize;
    loop {
        if steps >= budget {
            break;
        }
        for r in rels.iter_mut() {
            *r = canonical_relator(r);
        }
        rels.retain(|r| !r.is_empty());
        rels.sort();
        rels.dedup();
        // substitution: splice out an occurrence of more than half of another
        // relator, replacing it by the inverse of the remainder
        let mut changed = false;
        'subst: for i in 0..rels.len() {
            for j in 0..rels.len() {
                if i == j || rels[j].len() < 2 {
                    continue;
                }
                let r = rels[j].clone();
                let half = r.len() / 2 + 1;
                for base in [r.clone(), inv(&r)] {
                    for rot in 0..base.len() {
                        let mut u = base[rot..].to_vec();
                        u.extend_from_slice(&base[..rot]);
                        let piece = &u[..half];
                        let rest = inv(&u[half..]);
                        let s = rels[i].clone();
                        if s.len() < half {
                            continue;
                        }
                        for at in 0..=s.len() - half {
                            if &s[at..at + half] == piece {
                                let mut t = s[..at].to_vec();
                                t.extend_from_slice(&rest);
                                t.extend_from_slice(&s[at + half..]);
                                let t = reduce(&t);
                                if t.len() < s.len() {
                                    rels[i] = t;
                                    changed = true;
                                    steps += 1;
                                    break 'subst;
                                }
                            }
                        }
                    }
                }
            }
        }
        if changed {
            continue;
        }
        // elimination: a relator with a generator occurring exactly once
        // defines that generator
        let mut pick: Option<(usize, i32, Vec<i32>)> = None;
        'scan: for (ri, r) in rels.iter().enumerate() {
            for (i, &x) in r.iter().enumerate() {
                let y = x.abs();
                if r.iter().filter(|&&z| z.abs() == y).count() == 1 {
                    let mut rhs: Vec<i32> = inv(&r[..i]);
                    rhs.extend(inv(&r[i + 1..]));
                    let rhs = if x > 0 { reduce(&rhs) } else { inv(&reduce(&rhs)) };
                    pick = Some((ri, y, rhs));
                    break 'scan;
                }
            }
        }
        let Some((ri, y, rhs)) = pick else { break };
        steps += 1;
        rels.remove(ri);
        let substituted: Vec<Vec<i32>> = rels
            .iter()
            .map(|r| {
                let mut out = Vec::new();
                for &x in r {
                    if x == y {
                        out.extend_from_slice(&rhs);
                    } else if x == -y {
                        out.extend(inv(&rhs));
                    } else {
                        out.push(x);
                    }
                }
                reduce(&out)
            })
            .collect();
        // renumber: drop y, shift higher generators down
        let shift = |x: i32| -> i32 {
            let a = x.abs();
            let a2 = if a > y { a - 1 } else { a };
            a2 * x.signum()
        };
        rels = substituted
            .iter()
            .map(|r| r.iter().map(|&x| shift(x)).collect())
            .collect();
        gens -= 1;
    }
    GroupPresentation { generators: gens, relators: rels }
}

/// Smith normal form over the integers; returns the diagonal entries.
fn smith_diagonal(mut m: Vec<Vec<i64>>) -> Vec<i64> {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut diag = Vec::new();
    let mut top = 0usize;
    while top < rows.min(cols) {
        // find a nonzero pivot
        let mut pivot = None;
        'find: for i in top..rows {
            for j in top..cols {
                if m[i][j] != 0 {
                    pivot = Some((i, j));
                    break 'find;
                }
            }
        }
        let Some((pi, pj)) = pivot else { break };
        m.swap(top, pi);
        for row in m.iter_mut() {
            row.swap(top, pj);
        }
        loop {
            // clear the pivot column by row operations
            let mut dirty = false;
            for i in top + 1..rows {
                if m[i][top] != 0 {
                    let q = m[i][top].div_euclid(m[top][top]);
                    for j in top..cols {
                        m[i][j] -= q * m[top][j];
                    }
                    if m[i][top] != 0 {
                        m.swap(top, i);
                        dirty = true;
                    }
                }
            }
            for j in top + 1..cols {
                if m[top][j] != 0 {
                    let q = m[top][j].div_euclid(m[top][top]);
                    for row in m.iter_mut() {
                        let v = row[top];
                        row[j] -= q * v;
                    }
                    if m[top][j] != 0 {
                        for row in m.iter_mut() {
                            row.swap(top, j);
                        }
                        dirty = true;
                    }
                }
            }
            if !dirty {
                break;
            }
        }
        diag.push(m[top][top].abs());
        top += 1;
    }
    // enforce divisibility d_i | d_{i+1}
    let mut fixed = true;
    while fixed {
        fixed = false;
        for i in 0..diag.len().saturating_sub(1) {
            let (a, b) = (diag[i], diag[i + 1]);
            if a != 0 && b % a != 0 {
                let g = gcd(a, b);
                diag[i] = g;
                diag[i + 1] = a / g * b;
                fixed = true;
            }
        }
    }
    diag
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 { a.abs() } else { gcd(b, a % b) }
}

/// Abelianization invariants via Smith normal form of the exponent matrix.
pub fn abelianization(p: &GroupPresentation) -> AbelianInvariants {
    let g = p.generators;
    let m: Vec<Vec<i64>> = p
        .relators
        .iter()
        .map(|r| {
            let mut row = vec![0i64; g];
            for &x in r {
                row[x.unsigned_abs() as usize - 1] += x.signum() as i64;
            }
            row
        })
        .collect();
    let diag = smith_diagonal(m);
    let nonzero = diag.iter().filter(|&&d| d != 0).count();
    let torsion: Vec<u64> = diag.iter().filter(|&&d| d > 1).map(|&d| d as u64).collect();
    AbelianInvariants { free_rank: g - nonzero, torsion }
}

fn perms(n: usize) -> Vec<Vec<u8>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        let mut next = Vec::new();
        for p in &out {
            for i in 0..=p.len() {
                let mut q = p.clone();
                q.insert(i, p.len() as u8);
                next.push(q);
            }
        }
        out = next;
    }
    out.sort();
    out
}

fn compose(a: &[u8], b: &[u8]) -> Vec<u8> {
    // (a b)(x) = a(b(x))
    b.iter().map(|&x| a[x as usize]).collect()
}

fn invert(a: &[u8]) -> Vec<u8> {
    let mut out = vec![0u8; a.len()];
    for (i, &x) in a.iter().enumerate() {
        out[x as usize] = i as u8;
    }
    out
}

/// Exact homomorphism count into the symmetric group S_n by exhaustive
/// enumeration of generator images, pruning as soon as every generator of a
/// relator has an image.
pub fn count_homs(p: &GroupPresentation, n: usize) -> Result<u64, GroupError> {
    if p.generators > 4 || n > 5 {
        return Err(GroupError::TooLarge);
    }
    let sym = perms(n);
    let id: Vec<u8> = (0..n as u8).collect();
    // relators grouped by the highest generator they mention
    let mut by_max: Vec<Vec<&Vec<i32>>> = vec![Vec::new(); p.generators + 1];
    for r in &p.relators {
        let mx = r.iter().map(|x| x.unsigned_abs() as usize).max().unwrap_or(0);
        by_max[mx].push(r);
    }
    fn rec(
        depth: usize,
        images: &mut Vec<Vec<u8>>,
        sym: &[Vec<u8>],
        id: &[u8],
        by_max: &[Vec<&Vec<i32>>],
        gens: usize,
    ) -> u64 {
        for r in &by_max[depth] {
            let mut acc = id.to_vec();
            for &x in r.iter() {
                let g = &images[x.unsigned_abs() as usize - 1];
                let g = if x > 0 { g.clone() } else { invert(g) };
                acc = compose(&acc, &g);
            }
            if acc != id {
                return 0;
            }
        }
        if depth == gens {
            return 1;
        }
        let mut total = 0;
        for g in sym {
            images.push(g.clone());
            total += rec(depth + 1, images, sym, id, by_max, gens);
            images.pop();
        }
        total
    }
    let mut images = Vec::new();
    Ok(rec(0, &mut images, &sym, &id, &by_max, p.generators))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::banded::Band;
    use proptest::prelude::*;

    fn bw(n: usize, letters: &[i32]) -> BraidWord {
        BraidWord::new(n, letters.to_vec()).unwrap()
    }

    fn banded(b: usize, w12: &[i32], w31: &[i32], bands: Vec<Band>) -> BandedUnlink {
        BandedUnlink::new(b, bw(2 * b, w12), bw(2 * b, w31), bands).unwrap()
    }

    #[test]
    fn unknotted_sphere_group_is_z() {
        let bl = banded(1, &[], &[], vec![]);
        let p = presentation_from_banded(&bl).unwrap();
        assert_eq!(p.generators(), 1);
        assert!(p.relators().is_empty());
        let ab = abelianization(&p);
        assert_eq!(ab, AbelianInvariants { free_rank: 1, torsion: vec![] });
        assert_eq!(count_homs(&p, 3).unwrap(), 6);
    }

    #[test]
    fn cup_configuration_group_is_z() {
        let bl = banded(2, &[], &[], vec![Band::flat(2, 3).unwrap()]);
        let p = presentation_from_banded(&bl).unwrap();
        assert_eq!(p.generators(), 2);
        assert_eq!(p.relators().len(), 1);
        let s = tietze_simplify(&p, 1000);
        assert_eq!(s.generators(), 1);
        assert!(s.relators().is_empty());
        assert_eq!(count_homs(&p, 3).unwrap(), 6);
    }

    #[test]
    fn trefoil_plat_group() {
        let p = presentation_from_plat(&bw(4, &[2, 2, 2])).unwrap();
        assert_eq!(p.generators(), 2);
        assert_eq!(p.relators().len(), 2);
        assert_eq!(count_homs(&p, 3).unwrap(), 12);
        let ab = abelianization(&p);
        assert_eq!(ab, AbelianInvariants { free_rank: 1, torsion: vec![] });
        // matches the standard presentation <x,y | xyx = yxy>
        let braid = GroupPresentation::new(2, vec![vec![1, 2, 1, -2, -1, -2]]).unwrap();
        assert_eq!(count_homs(&braid, 3).unwrap(), 12);
        assert_eq!(count_homs(&p, 4).unwrap(), count_homs(&braid, 4).unwrap());
    }

    #[test]
    fn unknot_plat_group_is_z() {
        let p = presentation_from_plat(&bw(2, &[])).unwrap();
        let s = tietze_simplify(&p, 100);
        assert_eq!((s.generators(), s.relators().len()), (1, 0));
        let p2 = presentation_from_plat(&bw(4, &[2])).unwrap();
        assert_eq!(count_homs(&p2, 3).unwrap(), 6);
    }

    #[test]
    fn figure_eight_plat_group() {
        let p = presentation_from_plat(&bw(4, &[2, 2, 3, 3, -2])).unwrap();
        let ab = abelianization(&p);
        assert_eq!(ab, AbelianInvariants { free_rank: 1, torsion: vec![] });
        // determinant 5, so no dihedral image fits in S3 and only cyclic homs remain
        assert_eq!(count_homs(&p, 3).unwrap(), 6);
        assert_ne!(count_homs(&p, 3).unwrap(), count_homs(&presentation_from_plat(&bw(4, &[2, 2, 2])).unwrap(), 3).unwrap());
    }

    #[test]
    fn tube_and_crosscap_configurations() {
        // one unknot over four punctures; a trivial band gives a torus or
        // projective plane according to the feet directions
        let tube = banded(2, &[], &[2], vec![Band::flat(2, 3).unwrap()]);
        let p = presentation_from_banded(&tube).unwrap();
        assert_eq!(p.generators(), 1);
        assert_eq!(p.relators().len(), 1);
        let crosscap = banded(2, &[], &[2], vec![Band::flat(3, 4).unwrap()]);
        let q = presentation_from_banded(&crosscap).unwrap();
        let abs: Vec<AbelianInvariants> =
            [&p, &q].iter().map(|r| abelianization(r)).collect();
        assert!(abs.contains(&AbelianInvariants { free_rank: 1, torsion: vec![] }));
        assert!(abs.contains(&AbelianInvariants { free_rank: 0, torsion: vec![2] }));
    }

    #[test]
    fn tietze_simplifies_identified_generators() {
        let p = GroupPresentation::new(2, vec![vec![1, -2]]).unwrap();
        let s = tietze_simplify(&p, 100);
        assert_eq!((s.generators(), s.relators().len()), (1, 0));
        let q = GroupPresentation::new(2, vec![vec![1, 2, 1, -2, -1, -2], vec![]]).unwrap();
        let t = tietze_simplify(&q, 100);
        assert_eq!((t.generators(), t.relators().len()), (2, 1));
    }

    #[test]
    fn abelianization_examples() {
        let z = GroupPresentation::new(1, vec![]).unwrap();
        assert_eq!(abelianization(&z), AbelianInvariants { free_rank: 1, torsion: vec![] });
        let z2 = GroupPresentation::new(1, vec![vec![1, 1]]).unwrap();
        assert_eq!(abelianization(&z2), AbelianInvariants { free_rank: 0, torsion: vec![2] });
        let mixed = GroupPresentation::new(
            3,
            vec![vec![1, 1, 2, 2, 2, 2], vec![2, 2]],
        )
        .unwrap();
        let ab = abelianization(&mixed);
        assert_eq!(ab.free_rank, 1);
        assert_eq!(ab.torsion, vec![2, 2]);
    }

    #[test]
    fn count_homs_examples() {
        let z = GroupPresentation::new(1, vec![]).unwrap();
        assert_eq!(count_homs(&z, 3).unwrap(), 6);
        let braid = GroupPresentation::new(2, vec![vec![1, 2, 1, -2, -1, -2]]).unwrap();
        assert_eq!(count_homs(&braid, 3).unwrap(), 12);
        let z2 = GroupPresentation::new(1, vec![vec![1, 1]]).unwrap();
        assert_eq!(count_homs(&z2, 3).unwrap(), 4);
        let big = GroupPresentation::new(5, vec![]).unwrap();
        assert_eq!(count_homs(&big, 3), Err(GroupError::TooLarge));
        assert_eq!(count_homs(&z, 6), Err(GroupError::TooLarge));
    }

    #[test]
    fn presentation_text_round_trip() {
        let p = GroupPresentation::new(2, vec![vec![1, 2, 1, -2, -1, -2], vec![1, 1]]).unwrap();
        let text = p.emit_text();
        assert_eq!(GroupPresentation::parse_text(&text).unwrap(), p);
        assert!(GroupPresentation::parse_text("rel 1").is_err());
        assert!(GroupPresentation::parse_text("gens 1\nrel 2").is_err());
    }

    fn arb_presentation() -> impl Strategy<Value = GroupPresentation> {
        let relator = proptest::collection::vec(
            (1i32..=3, prop::bool::ANY).prop_map(|(g, s)| if s { g } else { -g }),
            0..6,
        );
        proptest::collection::vec(relator, 0..3)
            .prop_map(|rels| GroupPresentation::new(3, rels).unwrap())
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn tietze_preserves_invariants(p in arb_presentation()) {
            let s = tietze_simplify(&p, 200);
            prop_assert_eq!(count_homs(&p, 3).unwrap(), count_homs(&s, 3).unwrap());
            prop_assert_eq!(abelianization(&p), abelianization(&s));
        }

        #[test]
        fn plat_presentation_shape(letters in proptest::collection::vec(
            (1i32..=5, prop::bool::ANY).prop_map(|(k, s)| if s { k } else { -k }), 0..10)) {
            let w = bw(6, &letters);
            let p = presentation_from_plat(&w).unwrap();
            prop_assert_eq!(p.generators(), 3);
            prop_assert_eq!(p.relators().len(), 3);
        }
    }
}
