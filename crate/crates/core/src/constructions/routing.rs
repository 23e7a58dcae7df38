//! Permutation routing on boxes by rounds of adjacent transpositions.
//!
//! A box with side lengths `dims` has positions `0..Π dims` in row-major
//! order (axis 0 most significant). A round is a set of disjoint swaps of
//! positions that differ by one in exactly one coordinate.

pub type Round = Vec<(usize, usize)>;

pub fn volume(dims: &[usize]) -> usize {
    dims.iter().product()
}

pub fn coords(mut index: usize, dims: &[usize]) -> Vec<usize> {
    let mut out = vec![0; dims.len()];
    for axis in (0..dims.len()).rev() {
        out[axis] = index % dims[axis];
        index /= dims[axis];
    }
    out
}

/// Boustrophedon order: consecutive entries are neighbouring positions.
pub fn snake_order(dims: &[usize]) -> Vec<usize> {
    match dims.split_first() {
        None => vec![0],
        Some((&d0, rest)) => {
            let stride = volume(rest);
            let inner = snake_order(rest);
            (0..d0)
                .flat_map(|x| {
                    let sub: Box<dyn Iterator<Item = &usize>> = if x % 2 == 0 {
                        Box::new(inner.iter())
                    } else {
                        Box::new(inner.iter().rev())
                    };
                    sub.map(move |&y| x * stride + y)
                })
                .collect()
        }
    }
}

/// Rounds that carry the item at position `p` to `dest[p]` for every `p`.
///
/// Lines are sorted by odd-even transposition. Higher-dimensional boxes use
/// three phases: spread along axis 0 so each slice holds items with distinct
/// destinations in the remaining axes, route every slice recursively, then
/// sort along axis 0 again.
pub fn route(dims: &[usize], dest: &[usize]) -> Vec<Round> {
    assert_eq!(dest.len(), volume(dims));
    let cells: Vec<usize> = (0..dest.len()).collect();
    route_box(dims, &cells, dest)
}

fn route_box(dims: &[usize], cells: &[usize], dest: &[usize]) -> Vec<Round> {
    if dims.len() == 1 {
        return sort_line(cells, dest);
    }
    let d0 = dims[0];
    let stride = volume(&dims[1..]);
    let color = color_items(d0, stride, dest);

    let phase1 = parallel((0..stride).map(|y| {
        let line: Vec<usize> = (0..d0).map(|x| cells[x * stride + y]).collect();
        let keys: Vec<usize> = (0..d0).map(|x| color[x * stride + y]).collect();
        sort_line(&line, &keys)
    }));
    let mut slice_dest = vec![vec![0; stride]; d0];
    let mut final_row = vec![0; volume(dims)];
    for (i, &c) in color.iter().enumerate() {
        let y = i % stride;
        slice_dest[c][y] = dest[i] % stride;
        final_row[c * stride + dest[i] % stride] = dest[i] / stride;
    }
    let phase2 = parallel((0..d0).map(|c| {
        let slice: Vec<usize> = (0..stride).map(|y| cells[c * stride + y]).collect();
        route_box(&dims[1..], &slice, &slice_dest[c])
    }));
    let phase3 = parallel((0..stride).map(|y| {
        let line: Vec<usize> = (0..d0).map(|x| cells[x * stride + y]).collect();
        let keys: Vec<usize> = (0..d0).map(|x| final_row[x * stride + y]).collect();
        sort_line(&line, &keys)
    }));
    phase1.into_iter().chain(phase2).chain(phase3).collect()
}

/// Runs independent schedules side by side, round by round.
fn parallel(schedules: impl Iterator<Item = Vec<Round>>) -> Vec<Round> {
    let mut out: Vec<Round> = Vec::new();
    for schedule in schedules {
        for (i, round) in schedule.into_iter().enumerate() {
            if out.len() <= i {
                out.push(Vec::new());
            }
            out[i].extend(round);
        }
    }
    out
}

/// Odd-even transposition sort of `keys` (a permutation of `0..len`) along a
/// line of cells; rounds without swaps are dropped.
fn sort_line(cells: &[usize], keys: &[usize]) -> Vec<Round> {
    let len = cells.len();
    let mut keys = keys.to_vec();
    let mut rounds = Vec::new();
    for step in 0..len + 1 {
        if keys.windows(2).all(|w| w[0] < w[1]) {
            break;
        }
        let mut round = Vec::new();
        let mut i = step % 2;
        while i + 1 < len {
            if keys[i] > keys[i + 1] {
                keys.swap(i, i + 1);
                round.push((cells[i], cells[i + 1]));
            }
            i += 2;
        }
        if !round.is_empty() {
            rounds.push(round);
        }
    }
    debug_assert!(keys.windows(2).all(|w| w[0] < w[1]));
    rounds
}

/// Colors items with `0..d0` so that each line (fixed offset `y`) and each
/// destination offset receives every color once. The item multigraph between
/// current and destination offsets is `d0`-regular bipartite, so it splits
/// into `d0` perfect matchings.
fn color_items(d0: usize, stride: usize, dest: &[usize]) -> Vec<usize> {
    let mut adjacency: Vec<Vec<usize>> = vec![Vec::new(); stride];
    for i in 0..dest.len() {
        adjacency[i % stride].push(i);
    }
    let target = |i: usize| dest[i] % stride;
    let mut color = vec![usize::MAX; dest.len()];
    for c in 0..d0 {
        let mut owner: Vec<Option<usize>> = vec![None; stride];
        for left in 0..stride {
            let mut seen = vec![false; stride];
            let ok = augment(left, &adjacency, &color, &target, &mut owner, &mut seen);
            assert!(ok, "regular bipartite multigraphs have perfect matchings");
        }
        for item in owner.into_iter().flatten() {
            color[item] = c;
        }
    }
    color
}

fn augment(
    left: usize,
    adjacency: &[Vec<usize>],
    color: &[usize],
    target: &dyn Fn(usize) -> usize,
    owner: &mut [Option<usize>],
    seen: &mut [bool],
) -> bool {
    for &item in &adjacency[left] {
        if color[item] != usize::MAX {
            continue;
        }
        let right = target(item);
        if seen[right] {
            continue;
        }
        seen[right] = true;
        let free = match owner[right] {
            None => true,
            Some(other) => augment(other % adjacency.len(), adjacency, color, target, owner, seen),
        };
        if free {
            owner[right] = Some(item);
            return true;
        }
    }
    false
}

/// Applies `rounds` to `items` (item at each position), checking adjacency.
pub fn apply(dims: &[usize], items: &mut [usize], rounds: &[Round]) {
    for round in rounds {
        let mut touched = vec![false; items.len()];
        for &(a, b) in round {
            assert!(!touched[a] && !touched[b], "round reuses a position");
            touched[a] = true;
            touched[b] = true;
            let (ca, cb) = (coords(a, dims), coords(b, dims));
            let diff: usize = ca.iter().zip(&cb).map(|(x, y)| x.abs_diff(*y)).sum();
            assert_eq!(diff, 1, "swap of non-neighbouring positions");
            items.swap(a, b);
        }
    }
}
