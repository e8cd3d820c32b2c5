//! Named groups: cyclic, dihedral, symmetric, quaternion, elementary
//! abelian, and direct products.
//!
//! Every catalog group is returned in canonical element order: the identity
//! at index 0, then the remaining central elements, then the non-central
//! elements grouped by connected component of the non-central commuting
//! graph (components ordered by their first element in construction order).

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::graph::CommutingGraph;
use crate::group::{GroupError, GroupTable};
use crate::perm::Permutation;

/// Largest order any catalog spec may produce.
pub const CATALOG_ORDER_CAP: usize = 1024;
/// `symmetric:n` is limited to `n ≤ 6`.
pub const SYMMETRIC_DEGREE_CAP: usize = 6;

/// Builds a group from a spec string such as `dihedral:8` or
/// `product:cyclic:2xsymmetric:3`.
pub fn catalog(spec: &str) -> Result<GroupTable, GroupError> {
    let g = parse(spec.trim())?;
    Ok(canonical_order(&g))
}

fn unknown(spec: &str) -> GroupError {
    GroupError::UnknownSpec(String::from(spec))
}

fn number(spec: &str, s: &str) -> Result<usize, GroupError> {
    s.trim().parse().map_err(|_| unknown(spec))
}

fn check_order(requested: usize) -> Result<(), GroupError> {
    if requested > CATALOG_ORDER_CAP {
        return Err(GroupError::SizeCapExceeded {
            requested,
            cap: CATALOG_ORDER_CAP,
        });
    }
    Ok(())
}

fn parse(spec: &str) -> Result<GroupTable, GroupError> {
    let (kind, arg) = spec.split_once(':').ok_or_else(|| unknown(spec))?;
    match kind {
        "cyclic" => {
            let n = number(spec, arg)?;
            if n == 0 {
                return Err(unknown(spec));
            }
            check_order(n)?;
            Ok(cyclic(n))
        }
        "dihedral" => {
            let order = number(spec, arg)?;
            if order < 4 || order % 2 != 0 {
                return Err(unknown(spec));
            }
            check_order(order)?;
            Ok(dihedral(order / 2))
        }
        "symmetric" => {
            let n = number(spec, arg)?;
            if n == 0 {
                return Err(unknown(spec));
            }
            if n > SYMMETRIC_DEGREE_CAP {
                return Err(GroupError::SizeCapExceeded {
                    requested: n,
                    cap: SYMMETRIC_DEGREE_CAP,
                });
            }
            symmetric(n)
        }
        "quaternion" => match number(spec, arg)? {
            8 => Ok(quaternion8()),
            _ => Err(unknown(spec)),
        },
        "elementary_abelian" => {
            let (p, k) = arg.split_once('^').ok_or_else(|| unknown(spec))?;
            let (p, k) = (number(spec, p)?, number(spec, k)?);
            if !is_prime(p) || k == 0 {
                return Err(unknown(spec));
            }
            let order = (0..k)
                .try_fold(1usize, |acc, _| acc.checked_mul(p))
                .unwrap_or(usize::MAX);
            check_order(order)?;
            Ok(elementary_abelian(p, k))
        }
        "product" => {
            // Split at the first 'x' that leaves two valid specs.
            for (pos, _) in arg.match_indices('x') {
                let (left, right) = (&arg[..pos], &arg[pos + 1..]);
                if let (Ok(a), Ok(b)) = (parse(left), parse(right)) {
                    check_order(a.order().saturating_mul(b.order()))?;
                    return Ok(direct_product(&a, &b));
                }
            }
            Err(unknown(spec))
        }
        _ => Err(unknown(spec)),
    }
}

fn is_prime(p: usize) -> bool {
    p >= 2
        && (2..)
            .take_while(|d| d * d <= p)
            .all(|d| !p.is_multiple_of(d))
}

fn power_name(base: &str, e: usize) -> String {
    match e {
        0 => String::new(),
        1 => String::from(base),
        _ => format!("{base}^{e}"),
    }
}

fn from_rule(n: usize, names: Vec<String>, mul: impl Fn(usize, usize) -> usize) -> GroupTable {
    let table = (0..n)
        .flat_map(|a| (0..n).map(move |b| (a, b)))
        .map(|(a, b)| mul(a, b))
        .collect();
    GroupTable::from_flat(table, names).expect("catalog rule defines a group")
}

fn cyclic(n: usize) -> GroupTable {
    let names = (0..n)
        .map(|i| {
            if i == 0 {
                String::from("id")
            } else {
                power_name("g", i)
            }
        })
        .collect();
    from_rule(n, names, |a, b| (a + b) % n)
}

/// `⟨x, y : xᵐ = y² = id, yx = xᵐ⁻¹y⟩`, elements `xⁱyʲ` stored at `i + j·m`.
fn dihedral(m: usize) -> GroupTable {
    let names = (0..2 * m)
        .map(|k| {
            let (i, j) = (k % m, k / m);
            match (i, j) {
                (0, 0) => String::from("id"),
                (_, 0) => power_name("x", i),
                _ => format!("{}y", power_name("x", i)),
            }
        })
        .collect();
    from_rule(2 * m, names, |a, b| {
        let (i, j) = (a % m, a / m);
        let (k, l) = (b % m, b / m);
        // y·xᵏ = x⁻ᵏ·y
        let rot = if j == 0 { (i + k) % m } else { (i + m - k) % m };
        rot + ((j + l) % 2) * m
    })
}

fn symmetric(n: usize) -> Result<GroupTable, GroupError> {
    let gens: Vec<Permutation> = match n {
        1 => Vec::new(),
        2 => alloc::vec![Permutation::parse_cycles("(1 2)", Some(2))?],
        _ => {
            let long: Vec<String> = (1..=n).map(|p| p.to_string()).collect();
            alloc::vec![
                Permutation::parse_cycles(&format!("({})", long.join(" ")), Some(n))?,
                Permutation::parse_cycles("(1 2)", Some(n))?,
            ]
        }
    };
    GroupTable::from_generators(&gens)
}

/// `⟨a, b, c, d : a² = id, b² = c² = d² = bcd = a⟩` with elements
/// `id, a, b, ab, c, ac, d, ad` (that is ±1, ±i, ±j, ±k).
fn quaternion8() -> GroupTable {
    // unit index: 0 = 1, 1 = i, 2 = j, 3 = k; element = 2·unit + sign bit.
    const UNIT_MUL: [[(usize, bool); 4]; 4] = [
        [(0, false), (1, false), (2, false), (3, false)],
        [(1, false), (0, true), (3, false), (2, true)],
        [(2, false), (3, true), (0, true), (1, false)],
        [(3, false), (2, false), (1, true), (0, true)],
    ];
    let names = ["id", "a", "b", "ab", "c", "ac", "d", "ad"]
        .map(String::from)
        .to_vec();
    from_rule(8, names, |x, y| {
        let (u, v) = (x / 2, y / 2);
        let (w, neg) = UNIT_MUL[u][v];
        let sign = (x % 2 == 1) ^ (y % 2 == 1) ^ neg;
        2 * w + sign as usize
    })
}

fn elementary_abelian(p: usize, k: usize) -> GroupTable {
    let n = p.pow(k as u32);
    let digits = |mut x: usize| {
        let mut d = Vec::with_capacity(k);
        for _ in 0..k {
            d.push(x % p);
            x /= p;
        }
        d
    };
    let names = (0..n)
        .map(|x| {
            if x == 0 {
                String::from("id")
            } else {
                let parts: Vec<String> = digits(x).iter().map(|d| d.to_string()).collect();
                format!("({})", parts.join(","))
            }
        })
        .collect();
    from_rule(n, names, |a, b| {
        let (da, db) = (digits(a), digits(b));
        da.iter()
            .zip(&db)
            .rev()
            .fold(0, |acc, (x, y)| acc * p + (x + y) % p)
    })
}

fn direct_product(a: &GroupTable, b: &GroupTable) -> GroupTable {
    let nb = b.order();
    let names = (0..a.order() * nb)
        .map(|x| format!("({},{})", a.name(x / nb), b.name(x % nb)))
        .collect();
    from_rule(a.order() * nb, names, |x, y| {
        a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb)
    })
}

/// Reorders `g` into canonical catalog order (see the module docs).
pub fn canonical_order(g: &GroupTable) -> GroupTable {
    let graph = CommutingGraph::build(g);
    let mut order = Vec::with_capacity(g.order());
    order.push(g.identity());
    order.extend(graph.center().iter().filter(|&v| v != g.identity()));
    for block in graph.components() {
        order.extend(block.iter());
    }
    g.reindexed(&order)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::subset::Subset;

    fn names(g: &GroupTable) -> Vec<&str> {
        g.names().iter().map(String::as_str).collect()
    }

    #[test]
    fn symmetric3_matches_the_standard_enumeration() {
        let g = catalog("symmetric:3").unwrap();
        assert_eq!(
            names(&g),
            ["id", "(1 2 3)", "(1 3 2)", "(1 2)", "(2 3)", "(1 3)"]
        );
        assert_eq!(g.identity(), 0);
    }

    #[test]
    fn dihedral8_layout() {
        let g = catalog("dihedral:8").unwrap();
        assert_eq!(
            names(&g),
            ["id", "x^2", "x", "x^3", "y", "x^2y", "xy", "x^3y"]
        );
        assert_eq!(g.center(), Subset::from_indices(8, [0, 1]));
        // yx = x³y
        let (x, y) = (g.index_of("x").unwrap(), g.index_of("y").unwrap());
        assert_eq!(g.mul(y, x), g.index_of("x^3y").unwrap());
    }

    #[test]
    fn quaternion_layout_and_relations() {
        let g = catalog("quaternion:8").unwrap();
        assert_eq!(names(&g), ["id", "a", "b", "ab", "c", "ac", "d", "ad"]);
        let i = |n| g.index_of(n).unwrap();
        let a = i("a");
        assert_eq!(g.mul(a, a), i("id"));
        for x in ["b", "c", "d"] {
            assert_eq!(g.mul(i(x), i(x)), a);
        }
        assert_eq!(g.mul(g.mul(i("b"), i("c")), i("d")), a);
        assert_eq!(g.mul(a, i("b")), i("ab"));
        assert_eq!(g.center(), Subset::from_indices(8, [0, 1]));
        assert!(!g.is_abelian());
    }

    #[test]
    fn orders_and_abelianness() {
        for (spec, order, abelian) in [
            ("cyclic:1", 1, true),
            ("cyclic:12", 12, true),
            ("dihedral:4", 4, true),
            ("dihedral:10", 10, false),
            ("symmetric:1", 1, true),
            ("symmetric:2", 2, true),
            ("symmetric:5", 120, false),
            ("elementary_abelian:2^3", 8, true),
            ("elementary_abelian:3^2", 9, true),
            ("product:cyclic:2xsymmetric:3", 12, false),
            ("product:product:cyclic:2xcyclic:2xcyclic:2", 8, true),
        ] {
            let g = catalog(spec).unwrap();
            assert_eq!(g.order(), order, "{spec}");
            assert_eq!(g.is_abelian(), abelian, "{spec}");
            assert_eq!(g.identity(), 0, "{spec}");
        }
    }

    #[test]
    fn rejects_bad_specs() {
        for spec in [
            "",
            "cyclic",
            "cyclic:0",
            "cyclic:x",
            "dihedral:7",
            "dihedral:2",
            "quaternion:16",
            "elementary_abelian:4^2",
            "elementary_abelian:2",
            "product:cyclic:2",
            "alternating:4",
        ] {
            assert!(
                matches!(catalog(spec), Err(GroupError::UnknownSpec(_))),
                "{spec}"
            );
        }
        assert_eq!(
            catalog("symmetric:7"),
            Err(GroupError::SizeCapExceeded {
                requested: 7,
                cap: 6
            })
        );
        assert_eq!(
            catalog("cyclic:2048"),
            Err(GroupError::SizeCapExceeded {
                requested: 2048,
                cap: 1024
            })
        );
        assert!(matches!(
            catalog("product:symmetric:6xcyclic:2"),
            Err(GroupError::SizeCapExceeded {
                requested: 1440,
                ..
            })
        ));
    }

    #[test]
    fn center_comes_first_and_components_are_contiguous() {
        for spec in ["dihedral:12", "product:cyclic:3xsymmetric:3", "symmetric:4"] {
            let g = catalog(spec).unwrap();
            let z = g.center();
            assert_eq!(z, Subset::from_indices(g.order(), 0..z.len()), "{spec}");
            let graph = CommutingGraph::build(&g);
            let mut next = z.len();
            for block in graph.components() {
                assert_eq!(
                    block.to_vec(),
                    (next..next + block.len()).collect::<Vec<_>>(),
                    "{spec}"
                );
                next += block.len();
            }
            assert_eq!(next, g.order());
        }
    }
}
