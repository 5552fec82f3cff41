from __future__ import annotations

import logging
from typing import List

from pydantic import BaseModel, Field, field_validator, model_validator

# typing_extensions is for Python 3.9, 3.10 compatibility
from typing_extensions import Annotated, Self

from moodgauge.const import COUNTRY_CODE_REGEX, ISO_DATE_FORMAT

log = logging.getLogger(__name__)
NonEmptyString = Annotated[str, Field(..., min_length=1)]


class IndexSource(BaseModel):
    """One stock index of a country and the file holding its closing prices"""

    index_id: NonEmptyString
    price_file: NonEmptyString

    @field_validator("index_id", "price_file", mode="after")
    @classmethod
    def strip_whitespace(cls, val: str) -> str:
        val = val.strip()
        if not val:
            raise ValueError("must not be blank")
        return val


class CountrySource(BaseModel):
    """A country, its attention series and the indexes traded there"""

    country: str
    search_file: NonEmptyString
    indexes: List[IndexSource] = Field(..., min_length=1)

    @field_validator("country", mode="before")
    @classmethod
    def normalize_country_code(cls, val: str) -> str:
        code = str(val).strip().upper()
        if not COUNTRY_CODE_REGEX.match(code):
            raise ValueError(
                f"{val!r} is not an ISO 3166-1 alpha-3 country code (e.g. 'ITA')"
            )
        return code

    @model_validator(mode="after")
    def check_unique_indexes(self) -> Self:
        seen: set[str] = set()
        for source in self.indexes:
            if source.index_id in seen:
                raise ValueError(
                    f"index {source.index_id!r} is listed twice for {self.country}"
                )
            seen.add(source.index_id)
        return self


class PanelConfig(BaseModel):
    """
    Declarative description of a panel: which countries, where their attention
    series and index prices live, and how dates are written in those files.
    """

    countries: List[CountrySource] = []
    date_format: NonEmptyString = ISO_DATE_FORMAT
    allow_search_gaps: bool = False

    @model_validator(mode="after")
    def check_unique_countries(self) -> Self:
        seen: set[str] = set()
        for entry in self.countries:
            if entry.country in seen:
                raise ValueError(
                    f"country {entry.country} is listed more than once; list all of "
                    "its indexes under a single entry"
                )
            seen.add(entry.country)
        return self

    def select(self, codes: tuple[str, ...]) -> PanelConfig:
        """A copy restricted to ``codes``, keeping the configured order"""
        unknown = set(codes) - {entry.country for entry in self.countries}
        if unknown:
            raise ValueError(
                f"countries not present in the configuration: {', '.join(sorted(unknown))}"
            )
        return self.model_copy(
            update={
                "countries": [entry for entry in self.countries if entry.country in codes]
            }
        )
