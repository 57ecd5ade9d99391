//! Growable prime table backed by a segmented sieve of Eratosthenes.
//!
//! Readers take an `Arc` snapshot of the current table and never block one
//! another. Growth happens under the write lock: the table is extended by
//! sieving only the new range, at least doubling the covered limit, and the
//! snapshot is swapped in whole, so no caller sees a partial table.

use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::{Arc, OnceLock, RwLock};

use super::arith::isqrt;

/// Default ceiling on the sieve limit reachable through on-demand growth.
pub const DEFAULT_SIEVE_CAP: u64 = 100_000_000;

const INITIAL_LIMIT: u64 = 1 << 16;
const SEGMENT: u64 = 1 << 18;

#[derive(Debug, Clone)]
pub struct PrimeTable {
    limit: u64,
    primes: Vec<u64>,
}

impl PrimeTable {
    /// Every prime `<= limit`, in increasing order.
    pub fn build(limit: u64) -> Self {
        let mut table = PrimeTable { limit: 1, primes: Vec::new() };
        table.extend_to(limit);
        table
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    pub fn primes(&self) -> &[u64] {
        &self.primes
    }

    /// Membership for `n <= limit`; `None` when `n` is beyond the table.
    pub fn contains(&self, n: u64) -> Option<bool> {
        (n <= self.limit).then(|| self.primes.binary_search(&n).is_ok())
    }

    /// Number of primes `<= n`, for `n <= limit`.
    pub fn count_up_to(&self, n: u64) -> Option<usize> {
        (n <= self.limit).then(|| self.primes.partition_point(|&p| p <= n))
    }

    fn extend_to(&mut self, limit: u64) {
        if limit <= self.limit {
            return;
        }
        let root = isqrt(limit);
        if root > self.limit {
            self.extend_to(root);
        }
        let base: Vec<u64> = self.primes.iter().copied().take_while(|&p| p <= root).collect();

        let mut lo = self.limit + 1;
        while lo <= limit {
            let hi = limit.min(lo.saturating_add(SEGMENT - 1));
            let mut composite = vec![false; (hi - lo + 1) as usize];
            for &p in &base {
                let start = (p * p).max(lo.div_ceil(p) * p);
                let mut m = start;
                while m <= hi {
                    composite[(m - lo) as usize] = true;
                    m += p;
                }
            }
            for (offset, &c) in composite.iter().enumerate() {
                let n = lo + offset as u64;
                if !c && n >= 2 {
                    self.primes.push(n);
                }
            }
            if hi == u64::MAX {
                break;
            }
            lo = hi + 1;
        }
        self.limit = limit;
    }
}

#[derive(Debug)]
pub struct SieveCache {
    table: RwLock<Arc<PrimeTable>>,
    cap: AtomicU64,
}

impl SieveCache {
    pub fn new(initial_limit: u64, cap: u64) -> Self {
        SieveCache {
            table: RwLock::new(Arc::new(PrimeTable::build(initial_limit.min(cap)))),
            cap: AtomicU64::new(cap),
        }
    }

    /// Process-wide cache shared by every module.
    pub fn global() -> &'static SieveCache {
        static GLOBAL: OnceLock<SieveCache> = OnceLock::new();
        GLOBAL.get_or_init(|| SieveCache::new(INITIAL_LIMIT, DEFAULT_SIEVE_CAP))
    }

    pub fn cap(&self) -> u64 {
        self.cap.load(Ordering::Relaxed)
    }

    pub fn set_cap(&self, cap: u64) {
        self.cap.store(cap, Ordering::Relaxed);
    }

    pub fn snapshot(&self) -> Arc<PrimeTable> {
        Arc::clone(&self.table.read().unwrap_or_else(|e| e.into_inner()))
    }

    /// A table whose limit is at least `n`. Growth is geometric; requests
    /// past the cap are still honoured exactly, without overshoot.
    pub fn covering(&self, n: u64) -> Arc<PrimeTable> {
        let current = self.snapshot();
        if current.limit() >= n {
            return current;
        }
        let mut guard = self.table.write().unwrap_or_else(|e| e.into_inner());
        if guard.limit() >= n {
            return Arc::clone(&guard);
        }
        let target = n.max(guard.limit().saturating_mul(2).min(self.cap()));
        let mut grown = PrimeTable::clone(&guard);
        grown.extend_to(target);
        *guard = Arc::new(grown);
        Arc::clone(&guard)
    }

    /// The `k`-th prime (1-based), growing the table up to the cap.
    pub fn nth_prime(&self, k: u64) -> Option<u64> {
        if k == 0 {
            return None;
        }
        let idx = (k - 1) as usize;
        let mut table = self.snapshot();
        loop {
            if let Some(&p) = table.primes().get(idx) {
                return Some(p);
            }
            let cap = self.cap();
            if table.limit() >= cap {
                return None;
            }
            table = self.covering(table.limit().saturating_mul(2).min(cap));
        }
    }

    pub fn is_prime(&self, n: u64) -> bool {
        self.covering(n).contains(n).unwrap_or(false)
    }
}
