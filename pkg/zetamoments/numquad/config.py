from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator
import zetamoments.utils.constants as CONST


class QuadConfig(BaseModel):
    """
    Numerical parameters of the critical-line and auto-correlation integrals.

    Frozen, so a config can key the node and sample caches.
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    cutoff: float = Field(default=CONST.DEFAULT_CUTOFF, gt=0)
    panel_order: int = Field(default=CONST.DEFAULT_PANEL_ORDER, ge=CONST.MIN_PANEL_ORDER)
    panel_count: int = Field(default=CONST.DEFAULT_PANEL_COUNT, ge=1)
    zeta_terms: int = Field(default=CONST.DEFAULT_ZETA_TERMS, ge=1)
    zeta_corrections: int = Field(default=CONST.DEFAULT_ZETA_CORRECTIONS, ge=1, le=60)
    tol: float = Field(default=CONST.DEFAULT_TOL, gt=0)
    precision: int = Field(default=CONST.DEFAULT_PRECISION, ge=15, le=CONST.MAX_EVAL_DIGITS)
    threads: int = Field(default=1, ge=0)
    autocorr_cutoff: float = Field(default=CONST.DEFAULT_AUTOCORR_CUTOFF, gt=0)

    @field_validator("cutoff")
    @classmethod
    def cutoff_within_zeta_range(cls, v: float) -> float:
        if v > CONST.MAX_ZETA_HEIGHT:
            raise ValueError(f"cutoff {v} exceeds the supported zeta height {CONST.MAX_ZETA_HEIGHT}")
        return v

    @model_validator(mode="after")
    def cutoff_covers_near_panels(self) -> "QuadConfig":
        if self.cutoff <= CONST.NEAR_PANEL_EDGE:
            raise ValueError(f"cutoff must exceed {CONST.NEAR_PANEL_EDGE}, got {self.cutoff}")
        return self
