//! Left cells of a dihedral group in the labelling `1_k = s1 s2 s1 ...`,
//! `2_k = s2 s1 s2 ...` (`k` factors), `2_m` the longest element.

fn label(first: u8, k: usize, m: usize) -> String {
    if k == m {
        return format!("2_{m}");
    }
    format!("{first}_{k}")
}

/// `{2_1, 1_2, 2_3, ...}` and `{1_1, 2_2, 1_3, ...}` over `k` in `range`.
fn zigzag(start: u8, ks: std::ops::RangeInclusive<usize>, m: usize) -> Vec<String> {
    ks.map(|k| {
        let first = if (k % 2 == 1) == (start == 2) { 2 } else { 1 };
        label(first, k, m)
    })
    .collect()
}

/// Expected left cells, for `p_{s1} = p_{s2}` or `p_{s2} > p_{s1}` (m even).
pub fn expected_left_cells(m: usize, equal: bool) -> Vec<Vec<String>> {
    let mut cells = vec![vec!["1_0".to_string()], vec![format!("2_{m}")]];
    if equal {
        cells.push(zigzag(2, 1..=m - 1, m));
        cells.push(zigzag(1, 1..=m - 1, m));
    } else {
        assert!(m.is_multiple_of(2));
        cells.push(zigzag(2, 1..=m - 2, m));
        cells.push(vec![format!("2_{}", m - 1)]);
        cells.push(vec!["1_1".to_string()]);
        cells.push(zigzag(1, 2..=m - 1, m));
    }
    normalise(cells)
}

pub fn normalise(mut cells: Vec<Vec<String>>) -> Vec<Vec<String>> {
    for c in &mut cells {
        c.sort();
    }
    cells.sort();
    cells
}
