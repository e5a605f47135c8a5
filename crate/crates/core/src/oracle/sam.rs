//! Suffix automaton over small alphabets, used as the substring-membership
//! index behind the factor oracle. Built once over the concatenation of all
//! window images joined by a separator symbol; queries never contain the
//! separator, so membership answers are exact per block.

pub(crate) const NONE: u32 = u32::MAX;
pub(crate) const SYMBOLS: usize = 4; // 0, 1, 2 and the block separator

#[derive(Debug, Clone)]
pub(crate) struct State {
    pub len: u32,
    pub link: u32,
    pub next: [u32; SYMBOLS],
    /// End index (in the built sequence) of the first occurrence of the
    /// strings in this state's class.
    pub first_end: u32,
}

#[derive(Debug, Clone)]
pub(crate) struct Sam {
    pub states: Vec<State>,
    last: u32,
}

impl Sam {
    pub fn new() -> Sam {
        Sam {
            states: vec![State { len: 0, link: NONE, next: [NONE; SYMBOLS], first_end: NONE }],
            last: 0,
        }
    }

    pub fn build(sequence: &[u8]) -> Sam {
        let mut sam = Sam::new();
        sam.states.reserve(2 * sequence.len());
        for (i, &c) in sequence.iter().enumerate() {
            sam.extend(c, i as u32);
        }
        sam
    }

    fn extend(&mut self, c: u8, position: u32) {
        let c = c as usize;
        let cur = self.states.len() as u32;
        let cur_len = self.states[self.last as usize].len + 1;
        self.states.push(State {
            len: cur_len,
            link: NONE,
            next: [NONE; SYMBOLS],
            first_end: position,
        });
        let mut p = self.last;
        while p != NONE && self.states[p as usize].next[c] == NONE {
            self.states[p as usize].next[c] = cur;
            p = self.states[p as usize].link;
        }
        if p == NONE {
            self.states[cur as usize].link = 0;
        } else {
            let q = self.states[p as usize].next[c];
            if self.states[q as usize].len == self.states[p as usize].len + 1 {
                self.states[cur as usize].link = q;
            } else {
                let clone = self.states.len() as u32;
                let mut cloned = self.states[q as usize].clone();
                cloned.len = self.states[p as usize].len + 1;
                self.states.push(cloned);
                while p != NONE && self.states[p as usize].next[c] == q {
                    self.states[p as usize].next[c] = clone;
                    p = self.states[p as usize].link;
                }
                self.states[q as usize].link = clone;
                self.states[cur as usize].link = clone;
            }
        }
        self.last = cur;
    }

    /// Follows `word` from the root; `NONE` when it is not a factor.
    pub fn walk(&self, from: u32, word: &[u8]) -> u32 {
        let mut s = from;
        for &c in word {
            s = self.states[s as usize].next[c as usize];
            if s == NONE {
                return NONE;
            }
        }
        s
    }

    pub fn step(&self, from: u32, c: u8) -> u32 {
        self.states[from as usize].next[c as usize]
    }

    pub fn contains(&self, word: &[u8]) -> bool {
        self.walk(0, word) != NONE
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn symbols(text: &str) -> Vec<u8> {
        text.bytes().map(|b| b - b'0').collect()
    }

    #[test]
    fn membership_matches_naive_scan() {
        let text = symbols("0110100110010110");
        let sam = Sam::build(&text);
        for len in 0..=text.len() {
            for start in 0..=text.len() - len {
                assert!(sam.contains(&text[start..start + len]));
            }
        }
        assert!(!sam.contains(&symbols("000")));
        assert!(!sam.contains(&symbols("111")));
        assert!(sam.contains(&[]));
    }

    #[test]
    fn separator_blocks_cross_factors() {
        // "00" + sep + "11": "01" spans the separator and must be absent
        let sam = Sam::build(&[0, 0, 3, 1, 1]);
        assert!(sam.contains(&[0, 0]));
        assert!(sam.contains(&[1, 1]));
        assert!(!sam.contains(&[0, 1]));
    }

    #[test]
    fn first_end_points_at_an_occurrence() {
        let text = symbols("21012010");
        let sam = Sam::build(&text);
        for len in 1..=text.len() {
            for start in 0..=text.len() - len {
                let w = &text[start..start + len];
                let s = sam.walk(0, w);
                assert_ne!(s, NONE);
                let end = sam.states[s as usize].first_end as usize;
                assert_eq!(&text[end + 1 - len..=end], w);
            }
        }
    }
}
