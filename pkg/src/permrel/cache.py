"""On-disk cache of complete rewriting classes.

File layout, all integers little-endian:

    magic  b"PRCL1\\0"
    32 bytes  sha256 of the presentation digest
    u32 seed length, seed bytes
    u32 member count
    per member: u32 length, word bytes (one byte per letter)
    32 bytes  sha256 of everything above

A file whose checksum, presentation hash or seed does not match is ignored,
so the class is simply recomputed.
"""

from __future__ import annotations

import hashlib
import logging
import os
import struct
import tempfile
from pathlib import Path
from typing import Iterable, Optional

from .presentation import Presentation

MAGIC = b"PRCL1\0"
log = logging.getLogger(__name__)


class ClosureCache:
    def __init__(self, directory: str | os.PathLike):
        self.dir = Path(directory)
        self.hits = 0
        self.misses = 0
        self.writes = 0

    def _phash(self, p: Presentation) -> bytes:
        return hashlib.sha256(p.digest().encode()).digest()

    def path_for(self, p: Presentation, seed: bytes) -> Path:
        key = hashlib.sha256(self._phash(p) + bytes(seed)).hexdigest()
        return self.dir / f"{key[:32]}.cls"

    def get(self, p: Presentation, seed: bytes) -> Optional[list]:
        path = self.path_for(p, seed)
        try:
            data = path.read_bytes()
        except OSError:
            self.misses += 1
            return None
        words = decode(data, self._phash(p), bytes(seed))
        if words is None:
            log.warning("ignoring unusable cache file %s", path)
            self.misses += 1
            return None
        self.hits += 1
        return words

    def put(self, p: Presentation, seed: bytes, words: Iterable[bytes]):
        self.dir.mkdir(parents=True, exist_ok=True)
        data = encode(self._phash(p), bytes(seed), words)
        path = self.path_for(p, seed)
        fd, tmp = tempfile.mkstemp(dir=self.dir, suffix=".tmp")
        with os.fdopen(fd, "wb") as fh:
            fh.write(data)
        os.replace(tmp, path)
        self.writes += 1


def encode(phash: bytes, seed: bytes, words: Iterable[bytes]) -> bytes:
    words = sorted(bytes(w) for w in words)
    parts = [MAGIC, phash, struct.pack("<I", len(seed)), seed, struct.pack("<I", len(words))]
    for w in words:
        parts.append(struct.pack("<I", len(w)))
        parts.append(w)
    body = b"".join(parts)
    return body + hashlib.sha256(body).digest()


def decode(data: bytes, phash: bytes, seed: bytes) -> Optional[list]:
    """Member words, or None when the file is corrupt or belongs elsewhere."""
    if len(data) < len(MAGIC) + 32 + 8 + 32:
        return None
    body, check = data[:-32], data[-32:]
    if hashlib.sha256(body).digest() != check or not body.startswith(MAGIC):
        return None
    pos = len(MAGIC)
    if body[pos:pos + 32] != phash:
        return None
    pos += 32
    try:
        (slen,) = struct.unpack_from("<I", body, pos)
        pos += 4
        if body[pos:pos + slen] != seed:
            return None
        pos += slen
        (count,) = struct.unpack_from("<I", body, pos)
        pos += 4
        words = []
        for _ in range(count):
            (wlen,) = struct.unpack_from("<I", body, pos)
            pos += 4
            words.append(body[pos:pos + wlen])
            pos += wlen
    except struct.error:
        return None
    if pos != len(body) or seed not in words:
        return None
    return words
