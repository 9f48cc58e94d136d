use alloc::vec;
use alloc::vec::Vec;

use super::{ParityGame, Player, Solution};
use crate::Result;

/// Solves `game` with Zielonka's recursive algorithm.
pub fn solve(game: &ParityGame) -> Result<Solution> {
    game.validate()?;
    let n = game.vertex_count();
    let mut pred = vec![Vec::new(); n];
    for v in 0..n {
        for &w in game.successors(v) {
            pred[w].push(v);
        }
    }
    let mut solver = Solver { game, pred, alive: vec![true; n], count: vec![0; n], mark: vec![false; n] };
    let all: Vec<usize> = (0..n).collect();
    let [_, w1] = solver.recurse(&all);
    let mut winner = vec![Player::Even; n];
    for v in w1 {
        winner[v] = Player::Odd;
    }
    Ok(Solution { winner })
}

struct Solver<'a> {
    game: &'a ParityGame,
    pred: Vec<Vec<usize>>,
    alive: Vec<bool>,
    count: Vec<usize>,
    mark: Vec<bool>,
}

impl Solver<'_> {
    /// Winning regions of the subgame on `vertices` (all alive, a trap).
    fn recurse(&mut self, vertices: &[usize]) -> [Vec<usize>; 2] {
        let Some(p) = vertices.iter().map(|&v| self.game.color(v)).min() else {
            return [Vec::new(), Vec::new()];
        };
        let alpha = Player::of_color(p);
        let top: Vec<usize> = vertices.iter().copied().filter(|&v| self.game.color(v) == p).collect();
        let a = self.attractor(alpha, &top);
        let rest = self.without(vertices, &a);
        let w = self.recurse(&rest);
        self.restore(&a);
        let opp = alpha.opponent().index();
        if w[opp].is_empty() {
            let mut out = [Vec::new(), Vec::new()];
            out[alpha.index()] = vertices.to_vec();
            return out;
        }
        let b = self.attractor(alpha.opponent(), &w[opp]);
        let rest = self.without(vertices, &b);
        let mut w2 = self.recurse(&rest);
        self.restore(&b);
        w2[opp].extend_from_slice(&b);
        w2[opp].sort_unstable();
        w2
    }

    fn without(&mut self, vertices: &[usize], removed: &[usize]) -> Vec<usize> {
        for &v in removed {
            self.alive[v] = false;
        }
        vertices.iter().copied().filter(|&v| self.alive[v]).collect()
    }

    fn restore(&mut self, removed: &[usize]) {
        for &v in removed {
            self.alive[v] = true;
        }
    }

    /// Attractor for `player` to `target` inside the alive vertices, ascending.
    fn attractor(&mut self, player: Player, target: &[usize]) -> Vec<usize> {
        let mut attr: Vec<usize> = Vec::new();
        let mut touched: Vec<usize> = Vec::new();
        for &v in target {
            if !self.mark[v] {
                self.mark[v] = true;
                attr.push(v);
            }
        }
        let mut head = 0;
        while head < attr.len() {
            let v = attr[head];
            head += 1;
            for i in 0..self.pred[v].len() {
                let u = self.pred[v][i];
                if !self.alive[u] || self.mark[u] {
                    continue;
                }
                let take = if self.game.owner(u) == player {
                    true
                } else {
                    if self.count[u] == 0 {
                        touched.push(u);
                        self.count[u] = self.game.successors(u).iter().filter(|&&w| self.alive[w]).count();
                    }
                    self.count[u] -= 1;
                    self.count[u] == 0
                };
                if take {
                    self.mark[u] = true;
                    attr.push(u);
                }
            }
        }
        for &u in &touched {
            self.count[u] = 0;
        }
        for &v in &attr {
            self.mark[v] = false;
        }
        attr.sort_unstable();
        attr
    }
}
