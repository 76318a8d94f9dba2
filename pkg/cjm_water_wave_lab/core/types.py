"""Typed view of one experiment-config key and its JSON Schema."""

# AUTOGENERATED! DO NOT EDIT! File to edit: ../../nbs/core/types.ipynb.

# %% auto #0
__all__ = ['NULL_TOKENS', 'TRUE_TOKENS', 'FALSE_TOKENS', 'SchemaProperty']

# %% ../../nbs/core/types.ipynb #89613b50-e4f3-4a98-aa16-0343961d087f
from typing import Dict, Any, Optional
from dataclasses import dataclass

from .errors import ConfigError

# %% ../../nbs/core/types.ipynb #1f7e3a55
NULL_TOKENS = {"none", "null", "auto", ""}  # Raw values meaning "unset" for nullable keys
TRUE_TOKENS = {"true", "yes", "on", "1"}
FALSE_TOKENS = {"false", "no", "off", "0"}

# %% ../../nbs/core/types.ipynb #dd5226bc-fcb7-40f8-9bbe-4e7ca4e9c2d5
@dataclass
class SchemaProperty:
    """One key of an experiment config schema, able to read its own raw text."""
    name: str
    schema: Dict[str, Any]

    @property
    def type(
        self
    ) -> str:  # JSON type with any 'null' alternative removed
        """Get the property type."""
        json_type = self.schema.get('type', 'string')
        if isinstance(json_type, list):
            # Nullable keys are declared as ["number", "null"]
            concrete = [t for t in json_type if t != 'null']
            return concrete[0] if concrete else 'string'
        return json_type

    @property
    def is_nullable(
        self
    ) -> bool:  # True when 'null' is an allowed type
        json_type = self.schema.get('type')
        return isinstance(json_type, list) and 'null' in json_type

    @property
    def item_type(
        self
    ) -> Optional[str]:  # JSON type of array items, or None for scalars
        """Get the item type of an array property."""
        if self.type != 'array':
            return None
        return SchemaProperty(f"{self.name}[]", self.schema.get('items', {})).type

    @property
    def default(
        self
    ) -> Any:  # Schema default, None when absent
        return self.schema.get('default')

    def _coerce_scalar(
        self,
        raw: str,  # Stripped raw text
        json_type: str  # Target JSON type
    ) -> Any:  # Typed value
        try:
            if json_type == 'integer':
                return int(raw)
            if json_type == 'number':
                return float(raw)
        except ValueError:
            raise ConfigError(f"{self.name}: cannot read {raw!r} as {json_type}", key=self.name) from None
        if json_type == 'boolean':
            lowered = raw.lower()
            if lowered in TRUE_TOKENS: return True
            if lowered in FALSE_TOKENS: return False
            raise ConfigError(f"{self.name}: cannot read {raw!r} as boolean", key=self.name)
        return raw

    def coerce(
        self,
        raw: str  # Raw text from a `key = value` line
    ) -> Any:  # Value typed according to the schema
        """Convert raw config text into a typed value."""
        text = raw.strip()
        if self.is_nullable and text.lower() in NULL_TOKENS:
            return None
        if self.type == 'array':
            items = [t.strip() for t in text.strip('[]').split(',')]
            return [self._coerce_scalar(t, self.item_type) for t in items if t]
        return self._coerce_scalar(text, self.type)
