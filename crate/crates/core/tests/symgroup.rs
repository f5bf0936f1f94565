mod common;

use common::{compositions, inversions, perms};
use depthzero::partition::sign_induction_multiplicities;
use depthzero::symgroup::{
    character_table, decompose, factorial, induce_from_young, irreducible_character,
    standard_tableaux, ClassFunction, Factor,
};
use depthzero::{Error, Partition, PartitionVector};

fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

fn cycle_type(perm: &[usize]) -> Partition {
    let mut seen = vec![false; perm.len()];
    let mut lengths = Vec::new();
    for i in 0..perm.len() {
        if seen[i] {
            continue;
        }
        let mut len = 0;
        let mut j = i;
        while !seen[j] {
            seen[j] = true;
            j = perm[j];
            len += 1;
        }
        lengths.push(len);
    }
    Partition::from_lengths(&lengths)
}

#[test]
fn orthogonality_relations() {
    for n in 1..=8 {
        let t = character_table(n);
        let order = factorial(n);
        let k = t.classes.len();
        for a in 0..k {
            for b in 0..k {
                let row: i128 = (0..k)
                    .map(|c| t.class_sizes[c] * t.values[a][c] as i128 * t.values[b][c] as i128)
                    .sum();
                assert_eq!(row, if a == b { order } else { 0 });
                let col: i128 = (0..k).map(|l| t.values[l][a] as i128 * t.values[l][b] as i128).sum();
                let expected = if a == b { order / t.class_sizes[a] } else { 0 };
                assert_eq!(col, expected);
            }
        }
        assert_eq!(t.class_sizes.iter().sum::<i128>(), order);
    }
}

#[test]
fn class_sizes_match_enumeration() {
    for n in 1..=6 {
        let t = character_table(n);
        for (c, mu) in t.classes.iter().enumerate() {
            let count = perms(n).iter().filter(|w| &cycle_type(w) == mu).count() as i128;
            assert_eq!(t.class_sizes[c], count);
        }
    }
}

#[test]
fn degrees_are_hook_length_counts() {
    for n in 1..=9 {
        let id = Partition::column(n);
        for lam in Partition::all(n) {
            assert_eq!(irreducible_character(&lam).value(&id) as i128, standard_tableaux(&lam));
        }
    }
}

#[test]
fn trivial_and_sign() {
    for n in 1..=6 {
        let triv = irreducible_character(&Partition::row(n));
        let sign = irreducible_character(&Partition::column(n));
        for mu in Partition::all(n) {
            assert_eq!(triv.value(&mu), 1);
            let expected = if (n - mu.len()) % 2 == 0 { 1 } else { -1 };
            assert_eq!(sign.value(&mu), expected);
        }
    }
    let chi = irreducible_character(&p("2,1"));
    assert_eq!(chi.value(&p("1,1,1")), 2);
    assert_eq!(chi.value(&p("3")), -1);
    assert_eq!(chi.value(&p("2,1")), 0);
}

#[test]
fn sign_character_matches_inversion_parity() {
    for n in 1..=6 {
        let sign = irreducible_character(&Partition::column(n));
        for w in perms(n) {
            let expected = if inversions(&w) % 2 == 0 { 1 } else { -1 };
            assert_eq!(sign.value(&cycle_type(&w)), expected);
        }
    }
}

/// The permutation character on cosets of a Young subgroup counted directly:
/// fixed points of `g` on ordered set partitions into blocks of the given sizes.
fn young_permutation_character(lengths: &[usize]) -> ClassFunction {
    let n: usize = lengths.iter().sum();
    let labels: Vec<usize> = lengths
        .iter()
        .enumerate()
        .flat_map(|(i, &l)| std::iter::repeat_n(i, l))
        .collect();
    let mut fillings: Vec<Vec<usize>> = perms(n)
        .into_iter()
        .map(|w| w.iter().map(|&i| labels[i]).collect())
        .collect();
    fillings.sort();
    fillings.dedup();
    ClassFunction::from_fn(n, |mu| {
        let mut g = Vec::new();
        let mut start = 0;
        for &len in mu.parts() {
            for k in 0..len {
                g.push(start + (k + 1) % len);
            }
            start += len;
        }
        fillings
            .iter()
            .filter(|f| (0..n).all(|i| f[g[i]] == f[i]))
            .count() as i64
    })
}

#[test]
fn trivial_induction_is_permutation_character() {
    for n in 1..=6 {
        for lengths in compositions(n) {
            let factors = vec![Factor::Trivial; lengths.len()];
            assert_eq!(
                induce_from_young(&lengths, &factors),
                young_permutation_character(&lengths),
                "{lengths:?}"
            );
        }
    }
}

#[test]
fn induction_examples() {
    let sign = induce_from_young(&[4], &[Factor::Sign]);
    assert_eq!(sign, irreducible_character(&Partition::column(4)));
    let reg = induce_from_young(&[1, 1, 1], &[Factor::Sign, Factor::Trivial, Factor::Sign]);
    for mu in Partition::all(3) {
        let expected = if mu == Partition::column(3) { 6 } else { 0 };
        assert_eq!(reg.value(&mu), expected);
    }
    let mut want = PartitionVector::zero(3);
    want.add(p("3"), 1);
    want.add(p("2,1"), 2);
    want.add(p("1,1,1"), 1);
    assert_eq!(decompose(&reg).unwrap(), want);

    let chi = induce_from_young(&[2, 2], &[Factor::Sign, Factor::Sign]);
    let mut want = PartitionVector::zero(4);
    want.add(p("2,2"), 1);
    want.add(p("2,1,1"), 1);
    want.add(p("1,1,1,1"), 1);
    assert_eq!(decompose(&chi).unwrap(), want);
}

#[test]
fn decompose_rejects_non_characters() {
    let half = ClassFunction::from_fn(2, |mu| if mu.len() == 2 { 1 } else { 0 });
    assert_eq!(decompose(&half), Err(Error::NotVirtualCharacter));
}

#[test]
fn sign_induction_matches_characters() {
    for n in 1..=8 {
        for lengths in compositions(n) {
            let factors = vec![Factor::Sign; lengths.len()];
            assert_eq!(
                decompose(&induce_from_young(&lengths, &factors)).unwrap(),
                sign_induction_multiplicities(&lengths),
                "{lengths:?}"
            );
        }
    }
}
