//! Robinson–Schensted correspondence.

use std::collections::BTreeMap;

use cellkit::cells::{left_cells, right_cells, two_sided_cells, CellPartition};
use cellkit::tau::vogan_tau_partition;

pub type Tableau = Vec<Vec<usize>>;

/// Row insertion of `word`; returns the insertion and recording tableaux.
pub fn rsk(word: &[usize]) -> (Tableau, Tableau) {
    let mut p: Tableau = Vec::new();
    let mut q: Tableau = Vec::new();
    for (step, &letter) in word.iter().enumerate() {
        let mut x = letter;
        let mut row = 0;
        loop {
            if row == p.len() {
                p.push(vec![x]);
                q.push(vec![step + 1]);
                break;
            }
            match p[row].iter().position(|&y| y > x) {
                Some(i) => {
                    std::mem::swap(&mut p[row][i], &mut x);
                    row += 1;
                }
                None => {
                    p[row].push(x);
                    q[row].push(step + 1);
                    break;
                }
            }
        }
    }
    (p, q)
}

pub fn shape(t: &Tableau) -> Vec<usize> {
    t.iter().map(|r| r.len()).collect()
}

fn fibres<K: Ord>(n: usize, key: impl Fn(usize) -> K) -> Vec<Vec<usize>> {
    let mut map: BTreeMap<K, Vec<usize>> = BTreeMap::new();
    for w in 0..n {
        map.entry(key(w)).or_default().push(w);
    }
    let mut out: Vec<Vec<usize>> = map.into_values().collect();
    out.sort();
    out
}

fn blocks(p: &CellPartition) -> Vec<Vec<usize>> {
    let mut out = p.blocks().to_vec();
    out.sort();
    out
}

/// Left cells are the fibres of the recording tableau of the one-line
/// notation, right cells those of the insertion tableau.
pub fn check_type_a(rank: usize, left_count: usize) {
    let t = super::table(&format!("A{rank}"), &vec![1; rank]);
    let g = t.group();
    let oracle = super::perm::PermGroup::type_a(rank);
    let one_line: Vec<Vec<usize>> = g
        .elements()
        .map(|w| oracle.elements[oracle.of_word(g.word(w))].iter().map(|&x| x as usize).collect())
        .collect();
    for w in g.elements() {
        for s in 0..rank {
            let descent = one_line[w][s] > one_line[w][s + 1];
            assert_eq!(g.right_descents(w).contains(s), descent);
        }
    }
    let tableaux: Vec<_> = one_line.iter().map(|p| rsk(p)).collect();
    let left = left_cells(&t);
    assert_eq!(left.len(), left_count);
    assert_eq!(blocks(&left), fibres(g.order(), |w| tableaux[w].1.clone()));
    assert_eq!(blocks(&right_cells(&t)), fibres(g.order(), |w| tableaux[w].0.clone()));
    assert_eq!(blocks(&two_sided_cells(&t)), fibres(g.order(), |w| shape(&tableaux[w].0)));

    let vogan = vogan_tau_partition(g, t.weights()).unwrap();
    let mut classes = vogan.classes().to_vec();
    classes.sort();
    assert_eq!(classes, blocks(&left));
}
