use diagcat_core::symfunc::*;
use diagcat_core::tableaux::Partition;

// cycle index of 2-regular loopless multigraphs on [6]: partitions of [6]
// into blocks of size >= 2, blocks of size m >= 3 carrying one of (m-1)!/2
// cyclic graphs, blocks of size 2 a doubled edge.
fn all_multigraphs() -> Vec<Vec<(usize, usize, usize)>> {
    // graph = sorted list of (a, b, multiplicity)
    fn cycles_on(block: &[usize]) -> Vec<Vec<(usize, usize, usize)>> {
        if block.len() == 2 {
            return vec![vec![(block[0], block[1], 2)]];
        }
        // fix first vertex, permute rest, quotient by reflection
        let mut out = Vec::new();
        let rest: Vec<usize> = block[1..].to_vec();
        let mut perms = vec![vec![]];
        for _ in 0..rest.len() {
            let mut next = Vec::new();
            for b in perms {
                let k = b.len();
                for pos in 0..=k {
                    let mut v: Vec<usize> = b.clone();
                    v.insert(pos, rest[b.len()]);
                    next.push(v);
                }
            }
            perms = next;
        }
        for p in perms {
            if p[0] > p[p.len() - 1] { continue; } // reflection quotient
            let mut cyc = vec![block[0]];
            cyc.extend(&p);
            let mut edges: Vec<(usize, usize, usize)> = Vec::new();
            for i in 0..cyc.len() {
                let (a, b) = (cyc[i], cyc[(i + 1) % cyc.len()]);
                edges.push((a.min(b), a.max(b), 1));
            }
            edges.sort();
            out.push(edges);
        }
        out
    }
    fn set_partitions_min2(items: &[usize]) -> Vec<Vec<Vec<usize>>> {
        if items.is_empty() { return vec![vec![]]; }
        let first = items[0];
        let rest = &items[1..];
        let mut out = Vec::new();
        // choose the block containing `first` (size >= 2)
        let n = rest.len();
        for mask in 0u32..(1 << n) {
            let block: Vec<usize> = std::iter::once(first)
                .chain(rest.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &v)| v))
                .collect();
            if block.len() < 2 { continue; }
            let remaining: Vec<usize> = rest.iter().enumerate()
                .filter(|(i, _)| mask >> i & 1 == 0).map(|(_, &v)| v).collect();
            for mut sub in set_partitions_min2(&remaining) {
                sub.insert(0, block.clone());
                out.push(sub);
            }
        }
        out
    }
    let mut graphs = Vec::new();
    for blocks in set_partitions_min2(&[1, 2, 3, 4, 5, 6]) {
        let mut parts: Vec<Vec<Vec<(usize, usize, usize)>>> = Vec::new();
        for b in &blocks {
            parts.push(cycles_on(b));
        }
        fn product(parts: &[Vec<Vec<(usize, usize, usize)>>], acc: Vec<(usize, usize, usize)>, out: &mut Vec<Vec<(usize, usize, usize)>>) {
            if parts.is_empty() {
                let mut a = acc;
                a.sort();
                out.push(a);
                return;
            }
            for choice in &parts[0] {
                let mut a = acc.clone();
                a.extend(choice.iter().cloned());
                product(&parts[1..], a, out);
            }
        }
        product(&parts, vec![], &mut graphs);
    }
    graphs.sort();
    graphs.dedup();
    graphs
}

fn apply(sigma: &[usize], g: &[(usize, usize, usize)]) -> Vec<(usize, usize, usize)> {
    let mut out: Vec<(usize, usize, usize)> = g.iter().map(|&(a, b, m)| {
        let (x, y) = (sigma[a - 1], sigma[b - 1]);
        (x.min(y), x.max(y), m)
    }).collect();
    out.sort();
    out
}

#[test]
fn regular_graph_cycle_index_oracle() {
    let graphs = all_multigraphs();
    println!("total 2-regular loopless multigraphs on [6]: {}", graphs.len());
    // representatives of each cycle type of S_6 acting on 1..6
    let reps: Vec<(Vec<usize>, Vec<usize>)> = vec![
        (vec![1,1,1,1,1,1], vec![1,2,3,4,5,6]),
        (vec![2,1,1,1,1], vec![2,1,3,4,5,6]),
        (vec![2,2,1,1], vec![2,1,4,3,5,6]),
        (vec![2,2,2], vec![2,1,4,3,6,5]),
        (vec![3,1,1,1], vec![2,3,1,4,5,6]),
        (vec![3,2,1], vec![2,3,1,5,4,6]),
        (vec![3,3], vec![2,3,1,5,6,4]),
        (vec![4,1,1], vec![2,3,4,1,5,6]),
        (vec![4,2], vec![2,3,4,1,6,5]),
        (vec![5,1], vec![2,3,4,5,1,6]),
        (vec![6], vec![2,3,4,5,6,1]),
    ];
    let regf = invariant_character(&CharacterFamily::RegularGraphs { r: 6, k: 2 }).unwrap();
    for (ct, sigma) in reps {
        let fixed = graphs.iter().filter(|g| apply(&sigma, g) == **g).count();
        let lam = Partition::from_unsorted(ct.clone());
        let key = vec![lam.clone()];
        let coeff = regf.terms().get(&key).cloned().unwrap_or_else(|| rat(0));
        let z = num_rational::BigRational::from_integer(lam.z());
        println!("type {:?}: fix={} coeff={} z*coeff={}", ct, fixed, coeff, coeff.clone() * z.clone());
        assert_eq!(coeff * z, rat(fixed as i64), "type {:?}", ct);
    }
}
