"""Reading and writing elections.

Native format: first line ``m n``, then n lines of m space-separated 1-based
candidate indices, one vote per line, final newline, no trailing whitespace.
Writing then reading is the identity, byte for byte.

PrefLib .soc reader: the strict-complete-orders subset of the PrefLib format.
``#``-prefixed metadata lines, then data lines ``count: c1,c2,...`` where
``count`` is a multiplicity (votes are expanded to that many copies).
Tied groups in braces are rejected as unsupported rather than mis-read.
"""

from __future__ import annotations

import os

from .errors import IncompleteOrder, ParseError, UnsupportedFormat
from .model import Election, PreferenceOrder


def write_native(election: Election) -> str:
    lines = [f"{election.num_candidates} {election.num_voters}"]
    for vote in election.votes:
        lines.append(" ".join(str(c + 1) for c in vote.ranking))
    return "\n".join(lines) + "\n"


def read_native(text: str) -> Election:
    lines = text.splitlines()
    if not lines or not lines[0].strip():
        raise ParseError("expected a 'm n' header", line=1)
    header = lines[0].split()
    if len(header) != 2:
        raise ParseError(
            f"header must be two integers, got {lines[0]!r}", line=1
        )
    try:
        m, n = int(header[0]), int(header[1])
    except ValueError:
        raise ParseError(
            f"header must be two integers, got {lines[0]!r}", line=1
        ) from None
    if m < 1 or n < 1:
        raise ParseError(f"need at least one candidate and one vote, got {m} {n}", line=1)
    if len(lines) < 1 + n:
        raise ParseError(
            f"expected {n} votes, found {len(lines) - 1}", line=len(lines)
        )
    votes = []
    for idx in range(n):
        lineno = 2 + idx
        raw = lines[1 + idx]
        if not raw.strip():
            raise ParseError("blank line inside the vote block", line=lineno)
        entries = []
        for token in raw.split():
            try:
                entries.append(int(token) - 1)
            except ValueError:
                raise ParseError(
                    f"vote entry {token!r} is not an integer", line=lineno
                ) from None
        votes.append(tuple(entries))
    for extra in range(1 + n, len(lines)):
        if lines[extra].strip():
            raise ParseError(
                f"unexpected content after {n} votes", line=extra + 1
            )
    return Election(m, tuple(votes))


def read_preflib_soc(text: str) -> Election:
    declared_m: int | None = None
    names: dict[int, str] = {}
    data: list[tuple[int, int, tuple[int, ...]]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            body = line[1:].strip()
            key, sep, value = body.partition(":")
            if not sep:
                continue
            key = key.strip().upper()
            value = value.strip()
            if key == "NUMBER ALTERNATIVES":
                try:
                    declared_m = int(value)
                except ValueError:
                    raise ParseError(
                        f"NUMBER ALTERNATIVES is not an integer: {value!r}", line=lineno
                    ) from None
                if declared_m < 1:
                    raise ParseError(
                        f"NUMBER ALTERNATIVES must be positive, got {declared_m}",
                        line=lineno,
                    )
            elif key.startswith("ALTERNATIVE NAME"):
                suffix = key[len("ALTERNATIVE NAME") :].strip()
                try:
                    names[int(suffix)] = value
                except ValueError:
                    raise ParseError(
                        f"malformed alternative-name key {key!r}", line=lineno
                    ) from None
            continue
        count_str, sep, rest = line.partition(":")
        if not sep:
            raise ParseError("expected 'count: ranking'", line=lineno)
        try:
            count = int(count_str.strip())
        except ValueError:
            raise ParseError(
                f"vote count {count_str.strip()!r} is not an integer", line=lineno
            ) from None
        if count < 1:
            raise ParseError(f"vote count must be positive, got {count}", line=lineno)
        if "{" in rest or "}" in rest:
            raise UnsupportedFormat(
                "tied positions (braces) are not supported; only strict "
                "complete orders are read",
                line=lineno,
            )
        entries = []
        for token in rest.split(","):
            token = token.strip()
            if not token:
                raise ParseError("empty entry in ranking", line=lineno)
            try:
                entries.append(int(token))
            except ValueError:
                raise ParseError(
                    f"ranking entry {token!r} is not an integer", line=lineno
                ) from None
        data.append((lineno, count, tuple(entries)))
    if not data:
        raise ParseError("no vote data found", line=1)
    total = sum(count for _, count, _ in data)
    if total > 1_000_000:
        raise ParseError(f"vote counts expand to {total} votes; refusing over 1000000")
    m = declared_m if declared_m is not None else len(data[0][2])
    votes: list[tuple[int, ...]] = []
    for lineno, count, entries in data:
        # Length check first so a huge declared m never materializes a range.
        if len(entries) != m or sorted(entries) != list(range(1, m + 1)):
            raise IncompleteOrder(
                f"ranking must list each of 1..{m} exactly once, got {list(entries)}",
                line=lineno,
            )
        vote = tuple(c - 1 for c in entries)
        votes.extend([vote] * count)
    candidate_names = None
    if names and all(i in names for i in range(1, m + 1)):
        candidate_names = tuple(names[i] for i in range(1, m + 1))
    return Election(m, tuple(votes), candidate_names)


def load_election(path: str | os.PathLike) -> Election:
    """Read an election file; ``.soc`` files use the PrefLib reader, anything
    else the native format."""
    with open(path, "r", encoding="utf-8") as handle:
        text = handle.read()
    if str(path).endswith(".soc"):
        return read_preflib_soc(text)
    return read_native(text)


def save_election(path: str | os.PathLike, election: Election) -> None:
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(write_native(election))
