"""
Physical resonator and waveguide records feeding the figure-of-merit formulas.

All fields are SI except ``eta0``, which records carry in the usual W^-1 cm^-2 and
``from_record`` converts to W^-1 m^-2.

Attributes:
    ETA0_RECORD_FACTOR (float): Conversion of eta0 from W^-1 cm^-2 to W^-1 m^-2.
"""

# Import native packages
from dataclasses import dataclass, fields
from math import pi

# Import custom packages
from core.constants import c

ETA0_RECORD_FACTOR = 1e4

class MissingFieldError(ValueError):
    """
    A formula needs platform fields the record does not provide.
    """

@dataclass(frozen=True)
class Platform:
    """
    Physical description of one platform, every field but the name is optional.

    Attributes:
        name (str): Label of the record.
        lambda_fh (float): FH wavelength (m).
        n (float): Refractive index.
        n_g (float): Group index.
        d_eff (float): Quadratic susceptibility (m/V).
        chi_eff (float): Kerr susceptibility (m^2/V^2).
        Q_a (float): FH quality factor.
        Q_b (float): SH quality factor.
        V_tilde (float): Normalized mode volume.
        A_tilde (float): Normalized mode area.
        eta0 (float): Normalized SHG efficiency (W^-1 m^-2).
        alpha_loss (float): Propagation loss (m^-1).
        tau0 (float): Trap width (s).
        T_rt (float): Round-trip time (s).
        kappa_a (float): FH decay rate (rad/s).
        kappa_b (float): SH decay rate (rad/s).
        kappa_a_oc (float): FH outcoupling rate (rad/s).
        kappa_b_oc (float): SH outcoupling rate (rad/s).
        eta_norm (float): Measured cavity SHG efficiency P_out/P_in^2 (W^-1).
        p_th (float): Measured OPO threshold (W).
    """
    name: str = ""
    lambda_fh: float = None
    n: float = None
    n_g: float = None
    d_eff: float = None
    chi_eff: float = None
    Q_a: float = None
    Q_b: float = None
    V_tilde: float = None
    A_tilde: float = None
    eta0: float = None
    alpha_loss: float = None
    tau0: float = None
    T_rt: float = None
    kappa_a: float = None
    kappa_b: float = None
    kappa_a_oc: float = None
    kappa_b_oc: float = None
    eta_norm: float = None
    p_th: float = None

    def __post_init__(self):
        for item in fields(self):
            value = getattr(self,item.name)
            if item.name != "name" and value is not None and not value > 0:
                raise ValueError(f"Platform {self.name!r}: {item.name} must be positive, got {value}")
        for harmonic in ("a","b"):
            total = getattr(self,f"kappa_{harmonic}")
            outcoupling = getattr(self,f"kappa_{harmonic}_oc")
            if total is not None and outcoupling is not None and outcoupling > total:
                raise ValueError(f"Platform {self.name!r}: kappa_{harmonic}_oc={outcoupling} exceeds kappa_{harmonic}={total}")

    @classmethod
    def from_record(cls,record):
        """
        Build a platform from a JSON record, eta0 given in W^-1 cm^-2.

        Raises:
            ValueError: On unknown keys or invalid values.
        """
        known = {item.name for item in fields(cls)}
        unknown = sorted(set(record)-known)
        if unknown:
            raise ValueError(f"Unknown platform keys {unknown}, valid keys are: [{', '.join(sorted(known))}]")
        values = dict(record)
        if values.get("eta0") is not None:
            values["eta0"] = values["eta0"]*ETA0_RECORD_FACTOR

        return cls(**values)

    def require(self,*names):
        """
        Check that the named fields are present.

        Raises:
            MissingFieldError: Naming every missing field.
        """
        missing = [name for name in names if getattr(self,name) is None]
        if missing:
            raise MissingFieldError(f"Platform {self.name!r} lacks {', '.join(missing)}")

    @property
    def omega_a0(self):
        """
        float: FH carrier angular frequency (rad/s).
        """
        self.require("lambda_fh")
        return 2*pi*c/self.lambda_fh

    @property
    def omega_b0(self):
        """
        float: SH carrier angular frequency (rad/s).
        """
        return 2*self.omega_a0

    @property
    def v_g(self):
        """
        float: Group velocity (m/s).
        """
        self.require("n_g")
        return c/self.n_g
