//! Brute-force oracles shared by the integration tests.

use std::collections::HashMap;

use num_rational::Ratio;

/// Weighted number of SL(2,ℤ)-classes of positive definite forms of
/// discriminant `delta < 0`, found as connected components of the graph on
/// all forms with coefficients bounded by `|Δ|` under the generators
/// `S: (a, b, c) ↦ (c, −b, a)` and `T^{±1}: (a, b, c) ↦ (a, b ± 2a, a ± b + c)`.
///
/// None of these moves leaves the box on the way to a reduced form, so each
/// class meets the box in a single component.
pub fn hurwitz_by_orbits(delta: i64) -> Ratio<i128> {
    assert!(delta < 0);
    let bound = -delta;
    let mut index = HashMap::new();
    let mut forms = Vec::new();
    for a in 1..=bound {
        for b in -bound..=bound {
            let num = b * b - delta;
            if num % (4 * a) == 0 && num / (4 * a) <= bound {
                index.insert((a, b, num / (4 * a)), forms.len());
                forms.push((a, b, num / (4 * a)));
            }
        }
    }
    let mut parent: Vec<usize> = (0..forms.len()).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for (i, &(a, b, c)) in forms.iter().enumerate() {
        let moves = [
            (c, -b, a),
            (a, b + 2 * a, a + b + c),
            (a, b - 2 * a, a - b + c),
        ];
        for image in moves {
            if let Some(&j) = index.get(&image) {
                let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                parent[ri] = rj;
            }
        }
    }
    let mut weight: HashMap<usize, Ratio<i128>> = HashMap::new();
    for (i, &(a, b, c)) in forms.iter().enumerate() {
        let root = find(&mut parent, i);
        let w = if b == 0 && a == c {
            Ratio::new(1, 2)
        } else if a == b && b == c {
            Ratio::new(1, 3)
        } else {
            Ratio::from_integer(1)
        };
        let entry = weight.entry(root).or_insert(Ratio::from_integer(1));
        if w < *entry {
            *entry = w;
        }
    }
    weight.values().sum()
}
