use std::fs;
use std::path::{Path, PathBuf};
use std::sync::Mutex;
use std::time::{Duration, Instant};

use num_bigint::BigInt;

use super::{parse_bfile, parse_entry_json, read_maybe_gzip, OeisEntry, SequenceId};
use crate::error::{Error, Result};

/// Environment variable that overrides the entry cache directory.
pub const CACHE_DIR_ENV: &str = "SEQPRINT_CACHE_DIR";

/// Minimal blocking GET. `Ok(None)` means the resource does not exist.
pub trait Transport: Send + Sync {
    fn get(&self, url: &str) -> Result<Option<String>>;
}

/// HTTP transport against oeis.org (or a mirror with the same layout).
pub struct HttpTransport {
    agent: ureq::Agent,
}

impl HttpTransport {
    pub fn new(timeout: Duration) -> Self {
        let agent = ureq::Agent::config_builder()
            .timeout_global(Some(timeout))
            .http_status_as_error(false)
            .build()
            .into();
        HttpTransport { agent }
    }
}

impl Default for HttpTransport {
    fn default() -> Self {
        HttpTransport::new(Duration::from_secs(30))
    }
}

impl Transport for HttpTransport {
    fn get(&self, url: &str) -> Result<Option<String>> {
        let network = |message: String| Error::Network {
            url: url.to_string(),
            message,
        };
        let mut response = self
            .agent
            .get(url)
            .call()
            .map_err(|e| network(e.to_string()))?;
        match response.status().as_u16() {
            404 => Ok(None),
            200..=299 => response
                .body_mut()
                .read_to_string()
                .map(Some)
                .map_err(|e| network(e.to_string())),
            code => Err(network(format!("HTTP status {code}"))),
        }
    }
}

/// Spaces calls at least `1 / rate` seconds apart. Waiting callers queue on
/// the lock, so concurrent users share one request budget.
pub struct RateLimiter {
    interval: Duration,
    next: Mutex<Option<Instant>>,
}

impl RateLimiter {
    /// `per_second` must be positive; infinity disables spacing.
    pub fn new(per_second: f64) -> Result<Self> {
        if !(per_second > 0.0) {
            return Err(Error::invalid(format!("rate limit must be positive, got {per_second}")));
        }
        let interval = if per_second.is_finite() {
            Duration::from_secs_f64(1.0 / per_second)
        } else {
            Duration::ZERO
        };
        Ok(RateLimiter {
            interval,
            next: Mutex::new(None),
        })
    }

    pub fn wait(&self) {
        let mut next = self.next.lock().unwrap_or_else(|p| p.into_inner());
        let now = Instant::now();
        if let Some(at) = *next {
            if at > now {
                std::thread::sleep(at - now);
            }
        }
        *next = Some(Instant::now() + self.interval);
    }
}

/// Fetches OEIS entries and b-files through a one-file-per-entry cache.
pub struct Fetcher<T: Transport = HttpTransport> {
    transport: T,
    cache_dir: PathBuf,
    limiter: RateLimiter,
    base_url: String,
}

impl Fetcher<HttpTransport> {
    pub fn http(cache_dir: impl Into<PathBuf>, rate_limit: f64) -> Result<Self> {
        Fetcher::new(HttpTransport::default(), cache_dir, rate_limit)
    }
}

impl<T: Transport> Fetcher<T> {
    pub fn new(transport: T, cache_dir: impl Into<PathBuf>, rate_limit: f64) -> Result<Self> {
        Ok(Fetcher {
            transport,
            cache_dir: cache_dir.into(),
            limiter: RateLimiter::new(rate_limit)?,
            base_url: "https://oeis.org".to_string(),
        })
    }

    pub fn with_base_url(mut self, base: impl Into<String>) -> Self {
        self.base_url = base.into().trim_end_matches('/').to_string();
        self
    }

    pub fn cache_dir(&self) -> &Path {
        &self.cache_dir
    }

    fn entry_path(&self, id: SequenceId) -> PathBuf {
        self.cache_dir.join(format!("{id}.json"))
    }

    /// Returns the entry, from cache when present. A successful network
    /// fetch is written to the cache before returning.
    pub fn fetch_entry(&self, id: SequenceId) -> Result<OeisEntry> {
        let path = self.entry_path(id);
        if path.is_file() {
            let body = fs::read_to_string(&path).map_err(|e| Error::io(&path, e))?;
            return parse_entry_json(id, &body);
        }
        let url = format!("{}/search?q=id:{id}&fmt=json", self.base_url);
        self.limiter.wait();
        let body = self.transport.get(&url)?.ok_or(Error::NotFound(id))?;
        // validate before caching so a bad response is never served later
        let entry = parse_entry_json(id, &body)?;
        write_atomic(&path, body.as_bytes())?;
        Ok(entry)
    }

    /// Returns the b-file terms, or `None` when the OEIS has no b-file.
    pub fn fetch_bfile(&self, id: SequenceId) -> Result<Option<Vec<BigInt>>> {
        for name in [id.bfile_name(), format!("{}.gz", id.bfile_name())] {
            let path = self.cache_dir.join(name);
            if path.is_file() {
                return parse_bfile(&read_maybe_gzip(&path)?).map(Some);
            }
        }
        let url = format!("{}/{id}/{}", self.base_url, id.bfile_name());
        self.limiter.wait();
        let Some(body) = self.transport.get(&url)? else {
            return Ok(None);
        };
        let terms = parse_bfile(&body).map_err(|e| Error::MalformedRecord {
            id,
            message: format!("b-file: {e}"),
        })?;
        write_atomic(&self.cache_dir.join(id.bfile_name()), body.as_bytes())?;
        Ok(Some(terms))
    }
}

/// Write to a temporary sibling, then rename over the target.
pub(crate) fn write_atomic(path: &Path, bytes: &[u8]) -> Result<()> {
    let dir = path.parent().unwrap_or(Path::new("."));
    fs::create_dir_all(dir).map_err(|e| Error::io(dir, e))?;
    let tmp = dir.join(format!(
        ".{}.tmp{}",
        path.file_name().and_then(|n| n.to_str()).unwrap_or("out"),
        std::process::id()
    ));
    fs::write(&tmp, bytes).map_err(|e| Error::io(&tmp, e))?;
    fs::rename(&tmp, path).map_err(|e| Error::io(path, e))
}
