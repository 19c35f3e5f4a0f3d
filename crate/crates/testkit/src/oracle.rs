//! Reference computations by explicit cell counting.

use eulerspace_core::{Dyadic, SimplicialComplex, SimplicialMap};

fn is_subset(a: &[usize], b: &[usize]) -> bool {
    a.iter().all(|x| b.contains(x))
}

fn sign(n: usize) -> i64 {
    if n % 2 == 0 {
        1
    } else {
        -1
    }
}

/// All strictly increasing chains (under inclusion) drawn from `pool`,
/// including the empty chain. Each chain is listed bottom to top.
fn chains(pool: &[usize], simplices: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    let mut stack: Vec<Vec<usize>> = pool.iter().map(|&i| vec![i]).collect();
    while let Some(c) = stack.pop() {
        let top = *c.last().unwrap();
        for &j in pool {
            let (a, b) = (&simplices[top], &simplices[j]);
            if b.len() > a.len() && is_subset(a, b) {
                let mut next = c.clone();
                next.push(j);
                stack.push(next);
            }
        }
        out.push(c);
    }
    out
}

/// Link weights at simplex `tau` read off a triangulated small sphere.
///
/// In the barycentric subdivision the star of the barycenter `b_tau` is a
/// cone over the chains `C` with `C ∪ {tau}` a chain and `tau ∉ C`. The
/// small sphere around `b_tau` meets the open cone over the cell of `C` in an
/// open cell of dimension `|C| - 1`, lying in the open simplex `max(C ∪ {tau})`.
/// Returns, for every simplex index `s`, the sum of `(-1)^(|C|-1)` over
/// sphere cells lying in open simplex `s`.
pub fn small_sphere_weights(k: &SimplicialComplex, tau: usize) -> Vec<i64> {
    let simplices: Vec<Vec<usize>> = k.simplices().iter().map(|s| s.vertices().to_vec()).collect();
    let t = &simplices[tau];
    let below: Vec<usize> = (0..simplices.len())
        .filter(|&i| i != tau && is_subset(&simplices[i], t))
        .collect();
    let above: Vec<usize> = (0..simplices.len())
        .filter(|&i| i != tau && is_subset(t, &simplices[i]))
        .collect();
    let mut w = vec![0i64; simplices.len()];
    let lower = chains(&below, &simplices);
    let upper = chains(&above, &simplices);
    for lo in &lower {
        for up in &upper {
            let cells = lo.len() + up.len();
            if cells == 0 {
                continue;
            }
            let carrier = up.last().copied().unwrap_or(tau);
            w[carrier] += sign(cells - 1);
        }
    }
    w
}

/// `(Λφ)(tau)` for every simplex, via [`small_sphere_weights`].
pub fn link_by_small_spheres(k: &SimplicialComplex, values: &[Dyadic]) -> Vec<Dyadic> {
    (0..k.len())
        .map(|tau| {
            small_sphere_weights(k, tau)
                .iter()
                .zip(values)
                .fold(Dyadic::zero(), |acc, (w, v)| acc + Dyadic::from(*w) * v)
        })
        .collect()
}

/// Pushforward by decomposing `φ` over closed simplices and counting the
/// cells of each closed fiber.
///
/// `φ = Σ_σ c_σ 1_{cl σ}` with `c_σ = Σ_{ρ ⊇ σ} (-1)^(dim ρ - dim σ) φ(ρ)`.
/// Over an interior point of target simplex `σ'`, the fiber of `cl σ` is the
/// product over `w ∈ σ'` of the closed simplices spanned by the vertices of
/// `σ` sent to `w` (empty if some `w` has no preimage). Its Euler
/// characteristic is counted cell by cell as a product of faces.
pub fn pushforward_by_fibers(f: &SimplicialMap, values: &[Dyadic]) -> Vec<Dyadic> {
    let source = f.source();
    let target = f.target();
    let src: Vec<Vec<usize>> = source.simplices().iter().map(|s| s.vertices().to_vec()).collect();
    let coeff: Vec<Dyadic> = (0..src.len())
        .map(|i| {
            (0..src.len())
                .filter(|&j| is_subset(&src[i], &src[j]))
                .fold(Dyadic::zero(), |acc, j| {
                    acc + Dyadic::from(sign(src[j].len() - src[i].len())) * &values[j]
                })
        })
        .collect();
    let vm = f.vertex_map();
    target
        .simplices()
        .iter()
        .map(|t| {
            let mut total = Dyadic::zero();
            for (i, s) in src.iter().enumerate() {
                let mut chi = 1i64;
                for w in t.vertices() {
                    let group = s.iter().filter(|v| vm[v] == *w).count();
                    // Σ over nonempty faces F of a closed (group-1)-simplex of (-1)^(|F|-1)
                    let cells: i64 = (1..=group)
                        .map(|size| binomial(group, size) * sign(size - 1))
                        .sum();
                    chi *= cells;
                }
                total = total + Dyadic::from(chi) * &coeff[i];
            }
            total
        })
        .collect()
}

fn binomial(n: usize, k: usize) -> i64 {
    (0..k).fold(1i64, |acc, i| acc * (n - i) as i64 / (i as i64 + 1))
}

/// `∫φ dχ` as `Σ c_σ χ(cl σ)`, each closed simplex counted cell by cell.
pub fn integral_by_closed_cells(k: &SimplicialComplex, values: &[Dyadic]) -> Dyadic {
    let src: Vec<Vec<usize>> = k.simplices().iter().map(|s| s.vertices().to_vec()).collect();
    let mut total = Dyadic::zero();
    for s in &src {
        let c = (0..src.len())
            .filter(|&j| is_subset(s, &src[j]))
            .fold(Dyadic::zero(), |acc, j| acc + Dyadic::from(sign(src[j].len() - s.len())) * &values[j]);
        let chi: i64 = (1..=s.len()).map(|m| binomial(s.len(), m) * sign(m - 1)).sum();
        total = total + Dyadic::from(chi) * c;
    }
    total
}
