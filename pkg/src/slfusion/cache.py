"""On-disk cache of built modules, keyed by a content hash of the input.

Each cache file stores the per-bidegree ideal echelon rows (primitive integer
vectors); restoring a module replays the cheap normal-form reconstruction but
skips the elimination.  The encoding is versioned and self-describing; any
version or label mismatch triggers a full rebuild, never a partial read.
"""

from __future__ import annotations

import hashlib
import json
from pathlib import Path

from slfusion.modules import FusionModule, fusion_module, validate_composition

FORMAT_VERSION = 1


def cache_key(a) -> str:
    payload = json.dumps({"a": list(a), "version": FORMAT_VERSION}, sort_keys=True)
    return hashlib.sha256(payload.encode()).hexdigest()


class ModuleCache:
    def __init__(self, root):
        self.root = Path(root)
        self.root.mkdir(parents=True, exist_ok=True)

    def path_for(self, a) -> Path:
        return self.root / f"module-{cache_key(a)}.json"

    def load(self, a) -> FusionModule | None:
        a = validate_composition(a)
        path = self.path_for(a)
        if not path.exists():
            return None
        try:
            data = json.loads(path.read_text())
            if data.get("version") != FORMAT_VERSION or tuple(data.get("a", ())) != a:
                return None
            rows = {
                (int(k), int(s)): [tuple(int(x) for x in row) for row in rws]
                for k, s, rws in data["pieces"]
            }
            return FusionModule(a, _piece_rows=rows)
        except (ValueError, KeyError, TypeError, json.JSONDecodeError):
            return None

    def store(self, module: FusionModule) -> None:
        data = {
            "version": FORMAT_VERSION,
            "a": list(module.a),
            "total_dim": module.total_dim,
            "pieces": [
                [k, s, [list(r) for r in rows]]
                for (k, s), rows in sorted(module.ideal_rows.items())
                if rows
            ],
        }
        self.path_for(module.a).write_text(json.dumps(data))

    def get(self, a) -> FusionModule:
        """Load from disk or build and store; in-memory memoization applies."""
        from slfusion.modules import _MODULE_CACHE

        a = validate_composition(a)
        mod = _MODULE_CACHE.get(a)
        if mod is None:
            mod = self.load(a)
            if mod is None:
                mod = fusion_module(a)
            else:
                _MODULE_CACHE[a] = mod
        if not self.path_for(a).exists():
            self.store(mod)
        return mod

    def stored_labels(self) -> list[tuple]:
        out = []
        for path in sorted(self.root.glob("module-*.json")):
            try:
                data = json.loads(path.read_text())
                if data.get("version") == FORMAT_VERSION:
                    out.append(tuple(data["a"]))
            except (ValueError, KeyError, json.JSONDecodeError):
                continue
        return out

    def spot_check(self, rng) -> dict | None:
        """Rebuild one random cached module from scratch and compare characters."""
        labels = self.stored_labels()
        if not labels:
            return None
        a = labels[rng.randrange(len(labels))]
        cached = self.load(a)
        fresh = FusionModule(a)
        ok = cached is not None and cached.character() == fresh.character()
        return {"label": a, "ok": ok}
