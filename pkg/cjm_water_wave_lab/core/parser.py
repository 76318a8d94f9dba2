"""Flat `key = value` config parsing against a JSON Schema."""

# AUTOGENERATED! DO NOT EDIT! File to edit: ../../nbs/core/parser.ipynb.

# %% auto #0
__all__ = ['SchemaParser']

# %% ../../nbs/core/parser.ipynb #89613b50-e4f3-4a98-aa16-0343961d087f
from typing import Dict, Any, Optional
from .types import SchemaProperty
from .errors import ConfigError

# %% ../../nbs/core/parser.ipynb #dd5226bc-fcb7-40f8-9bbe-4e7ca4e9c2d5
class SchemaParser:
    """Read flat key-value config text against the properties of a schema."""

    def __init__(
        self,
        schema: Dict[str, Any]  # JSON Schema dictionary
    ):
        self.schema = schema
        self.properties = {name: SchemaProperty(name, prop_schema)
                           for name, prop_schema in schema.get('properties', {}).items()}

    def get_property(
        self,
        name: str  # Property name
    ) -> Optional[SchemaProperty]:  # SchemaProperty object or None if not found
        """Get a specific property by name."""
        return self.properties.get(name)

    def defaults(
        self
    ) -> Dict[str, Any]:  # Mapping of every key with a default to that default
        """Collect schema defaults."""
        return {name: p.default for name, p in self.properties.items() if 'default' in p.schema}

    def parse_text(
        self,
        text: str  # Config file contents
    ) -> Dict[str, Any]:  # Typed values for the keys present in the text
        """Read `key = value` lines; `#` starts a comment, blank lines are skipped."""
        values = {}
        for lineno, line in enumerate(text.splitlines(), start=1):
            line = line.split('#', 1)[0].strip()
            if not line: continue
            if '=' not in line:
                raise ConfigError(f"line {lineno}: expected 'key = value', got {line!r}")
            key, raw = (part.strip() for part in line.split('=', 1))
            key = key.replace('-', '_')
            prop = self.get_property(key)
            if prop is None:
                raise ConfigError(f"line {lineno}: unknown key {key!r}", key=key)
            if key in values:
                raise ConfigError(f"line {lineno}: duplicate key {key!r}", key=key)
            values[key] = prop.coerce(raw)
        return values
