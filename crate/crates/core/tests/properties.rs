use num_bigint::BigUint;
use oddaut::abelian::hom_count;
use oddaut::catalog::GroupSpec;
use oddaut::format::{parse_group_str, write_group_string};
use oddaut::group::{abelian, direct_product, generated_subgroup, quotient, semidirect_product};
use oddaut::linalg::{coordinates, decompose, gl_order, FpMatrix};
use oddaut::structure::{center, derived_subgroup};
use oddaut::{ActionSpec, Group};
use proptest::prelude::*;
use proptest::sample::Index;

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// `r` with `r^k = 1 mod m`, for a `C_m : C_k` spec.
fn power_roots(m: u64, k: u64) -> Vec<u64> {
    (1..m).filter(|&r| gcd(r, m) == 1 && (0..k).fold(1, |acc, _| acc * r % m) == 1).collect()
}

fn small_spec() -> impl Strategy<Value = String> {
    let leaf = prop_oneof![
        (1usize..40).prop_map(|n| format!("cyclic:{n}")),
        (prop::sample::select(vec![2usize, 3, 5]), prop::collection::vec(1u32..3, 1..4)).prop_map(|(p, mut e)| {
            e.sort_unstable_by(|a, b| b.cmp(a));
            let l: Vec<String> = e.iter().map(|&k| p.pow(k).to_string()).collect();
            format!("abelian:{}", l.join(","))
        }),
        (3usize..10).prop_map(|n| format!("dihedral:{n}")),
        (2usize..5).prop_map(|n| format!("dicyclic:{n}")),
        prop_oneof![Just("extraspecial:3:3"), Just("extraspecial:3:9"), Just("alternating:4"), Just("symmetric:3")]
            .prop_map(str::to_string),
        (2u64..20, 2u64..7, any::<Index>()).prop_filter_map("needs a nontrivial root", |(m, k, i)| {
            let roots: Vec<u64> = power_roots(m, k).into_iter().filter(|&r| r != 1).collect();
            (!roots.is_empty()).then(|| format!("sdp:(cyclic:{m})x(cyclic:{k}):power={}", roots[i.index(roots.len())]))
        }),
    ];
    (leaf.clone(), prop::option::weighted(0.3, leaf)).prop_filter_map("order bound", |(a, b)| {
        let s = match b {
            Some(b) => format!("direct:({a})x({b})"),
            None => a,
        };
        let spec = GroupSpec::parse(&s).ok()?;
        (spec.order()? <= 200).then_some(s)
    })
}

fn build(s: &str) -> Group {
    GroupSpec::parse(s).unwrap().build().unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn tables_are_groups(s in small_spec()) {
        let g = build(&s);
        let n = g.order();
        for a in g.elements() {
            let mut seen = vec![false; n];
            for b in g.elements() {
                let c = g.mul(a, b);
                prop_assert!(!seen[c]);
                seen[c] = true;
            }
            prop_assert_eq!(g.mul(0, a), a);
            prop_assert_eq!(g.mul(a, g.inv(a)), 0);
            prop_assert_eq!(n % g.element_order(a), 0);
        }
        if n <= 64 {
            for a in g.elements() {
                for b in g.elements() {
                    for c in g.elements() {
                        prop_assert_eq!(g.mul(g.mul(a, b), c), g.mul(a, g.mul(b, c)));
                    }
                }
            }
        }
    }

    #[test]
    fn lagrange(s in small_spec(), picks in prop::collection::vec(any::<Index>(), 0..3)) {
        let g = build(&s);
        let gens: Vec<usize> = picks.iter().map(|i| i.index(g.order())).collect();
        let h = generated_subgroup(&g, &gens);
        prop_assert_eq!(g.order() % h.order(), 0);
        for &x in h.members() {
            for &y in h.members() {
                prop_assert!(h.contains(g.mul(x, y)));
            }
        }
    }

    #[test]
    fn quotient_projection_is_homomorphism(s in small_spec()) {
        let g = build(&s);
        for n in [center(&g), derived_subgroup(&g)] {
            let (q, pi) = quotient(&g, &n).unwrap();
            prop_assert_eq!(q.order() * n.order(), g.order());
            for x in g.elements() {
                for y in g.elements() {
                    prop_assert_eq!(pi.image(g.mul(x, y)), q.mul(pi.image(x), pi.image(y)));
                }
            }
            let k = pi.kernel();
            prop_assert_eq!(k.members(), n.members());
        }
    }

    #[test]
    fn trivial_action_is_direct(a in small_spec(), b in small_spec()) {
        let (a, b) = (build(&a), build(&b));
        prop_assume!(a.order() * b.order() <= 400);
        let d = direct_product(&a, &b).unwrap();
        let s = semidirect_product(&a, &b, &ActionSpec::trivial(&b, &a)).unwrap();
        prop_assert!(d.same_table(&s));
    }

    #[test]
    fn file_round_trip(s in small_spec()) {
        let g = build(&s);
        let text = write_group_string(&g, Some(&s));
        let f = parse_group_str(&text).unwrap();
        prop_assert!(f.group.same_table(&g));
        prop_assert_eq!(write_group_string(&f.group, f.spec.as_deref()), text);
    }

    #[test]
    fn spec_round_trip(s in small_spec()) {
        let spec = GroupSpec::parse(&s).unwrap();
        let again = GroupSpec::parse(&spec.to_string()).unwrap();
        prop_assert_eq!(&again, &spec);
        prop_assert_eq!(spec.order(), Some(spec.build().unwrap().order()));
    }
}

/// Counts homomorphisms by backtracking over images of every element.
fn brute_hom_count(a: &Group, b: &Group) -> u64 {
    fn go(a: &Group, b: &Group, img: &mut Vec<Option<usize>>, x: usize) -> u64 {
        if x == a.order() {
            return 1;
        }
        let mut total = 0;
        for y in b.elements() {
            img[x] = Some(y);
            let ok = (0..=x).all(|u| {
                (0..=x).all(|v| {
                    let w = a.mul(u, v);
                    match (img[u], img[v], img[w]) {
                        (Some(iu), Some(iv), Some(iw)) if w <= x => b.mul(iu, iv) == iw,
                        _ => true,
                    }
                })
            });
            if ok {
                total += go(a, b, img, x + 1);
            }
        }
        img[x] = None;
        total
    }
    let mut img = vec![None; a.order()];
    img[0] = Some(0);
    go(a, b, &mut img, 1)
}

fn factors() -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(prop_oneof![Just(2usize), Just(3), Just(4), Just(6), Just(9)], 1..3).prop_map(|mut v| {
        // make a divisibility chain
        v.sort_unstable();
        let mut out: Vec<usize> = Vec::new();
        for d in v {
            let last = out.last().copied().unwrap_or(1);
            out.push(if d % last == 0 { d } else { d * last });
        }
        out.reverse();
        out
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn hom_count_symmetric(x in factors(), y in factors()) {
        let (a, b) = (abelian(&x).unwrap(), abelian(&y).unwrap());
        prop_assume!(a.order() <= 400 && b.order() <= 400);
        let ab = hom_count(&a, &b).unwrap();
        prop_assert_eq!(&ab, &hom_count(&b, &a).unwrap());
        if a.order() <= 12 && b.order() <= 12 {
            prop_assert_eq!(ab, BigUint::from(brute_hom_count(&a, &b)));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn companion_det_identity(p in prop::sample::select(vec![3u64, 5, 7, 13]), k in prop::collection::vec(0i64..13, 1..=5)) {
        let n = k.len() as i64;
        let c = FpMatrix::companion(p, &k).unwrap();
        let d = c.sub(&FpMatrix::identity(p, k.len())).det();
        let sum: i64 = k.iter().sum();
        let sign = if n % 2 == 1 { 1 } else { -1 };
        prop_assert_eq!(d as i64, (sign * (sum - 1)).rem_euclid(p as i64));
    }
}

fn det2(m: &[u64], p: u64) -> u64 {
    (m[0] * m[3] + p * p - m[1] * m[2] % p) % p
}

#[test]
fn gl_orders_match_brute_force() {
    for (n, q) in [(1u32, 2u64), (1, 3), (1, 5), (2, 2), (2, 3)] {
        let cells = (n * n) as usize;
        let mut count = 0u64;
        for code in 0..q.pow(cells as u32) {
            let mut c = code;
            let m: Vec<u64> = (0..cells)
                .map(|_| {
                    let d = c % q;
                    c /= q;
                    d
                })
                .collect();
            let det = if n == 1 { m[0] } else { det2(&m, q) };
            count += (det != 0) as u64;
        }
        assert_eq!(gl_order(n, q).unwrap(), BigUint::from(count), "GL({n},{q})");
    }
}

fn block_choices(p: u64) -> Vec<Vec<Vec<i64>>> {
    let mut out: Vec<Vec<Vec<i64>>> = (1..p as i64).map(|a| vec![vec![a]]).collect();
    if p == 3 {
        out.push(vec![vec![0, 1], vec![-1, 0]]);
    }
    out
}

fn block_diag(p: u64, blocks: &[Vec<Vec<i64>>]) -> FpMatrix {
    let n: usize = blocks.iter().map(|b| b.len()).sum();
    let mut rows = vec![vec![0i64; n]; n];
    let mut off = 0;
    for b in blocks {
        for (i, r) in b.iter().enumerate() {
            for (j, &x) in r.iter().enumerate() {
                rows[off + i][off + j] = x;
            }
        }
        off += b.len();
    }
    FpMatrix::from_rows(p, &rows).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn decomposition_is_invariant(
        p in prop::sample::select(vec![3u64, 5, 7]),
        picks in prop::collection::vec((any::<Index>(), any::<Index>()), 1..4),
        conj in prop::collection::vec(0i64..7, 36),
    ) {
        let choices = block_choices(p);
        let first: Vec<_> = picks.iter().map(|(i, _)| choices[i.index(choices.len())].clone()).collect();
        // second generator uses scalars on the same blocks so the two commute
        let second: Vec<_> = picks
            .iter()
            .zip(&first)
            .map(|((_, j), b)| {
                let s = 1 + j.index(p as usize - 1) as i64;
                b.iter().enumerate().map(|(r, row)| row.iter().enumerate().map(|(c, _)| if r == c { s } else { 0 }).collect()).collect()
            })
            .collect::<Vec<Vec<Vec<i64>>>>();
        let n: usize = first.iter().map(|b| b.len()).sum();
        let pm = FpMatrix::new(p, n, &conj[..n * n]).unwrap();
        prop_assume!(pm.det() != 0);
        let pinv = pm.inverse().unwrap();
        let m1 = pinv.mul(&block_diag(p, &first)).mul(&pm);
        let m2 = pinv.mul(&block_diag(p, &second)).mul(&pm);
        let dec = decompose(&[m1.clone(), m2.clone()]).unwrap();
        prop_assert_eq!(dec.blocks.iter().map(|b| b.dim).sum::<usize>(), n);
        for b in &dec.blocks {
            for v in &b.basis {
                for m in [&m1, &m2] {
                    prop_assert!(coordinates(p, &b.basis, &m.apply(v)).is_some());
                }
            }
            if b.dim <= 5 {
                prop_assert!(b.irreducible_certified);
            }
        }
    }
}
