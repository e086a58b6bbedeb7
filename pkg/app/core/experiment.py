"""
Module containing the experiments run from the command line.

Each experiment reads its resolved parameters, runs the simulation and writes its
artifacts into the work folder. Sweep points are independent and may be fanned out to
a process pool, results are always ordered by parameter index.

Attributes:
    experiments (dict): Experiment classes by subcommand name.
"""

# Import native packages
from concurrent.futures import ProcessPoolExecutor
from functools import partial
import logging
import os

# Import pypi packages
import numpy as np

# Import custom packages
from core.model import TrapModel
from core.settings import dump_json
from datamod.platforms import Platform
from datamod.results import (save_checkpoint, write_eigenmodes, write_flux_snapshots, write_results, write_table,
                             write_trajectory)
from fommod import evaluate_platforms
from gatemod import rabi_period, rabi_trace, run_upi
from gatemod.baseline import gaussian_baseline
from gatemod.cz import cz_error
from gatemod.performance import is_monotonic_decreasing, loglog_slope
from trapmod.analytic import analytic_bound_modes, effective_g_general

logger = logging.getLogger(__name__)

MODEL_KEYS = ("alpha","rho","delta","r_norm","n_grid","box","n_modes","scheme")

def model_kwargs(params):
    """
    Keyword arguments of TrapModel.from_gap_ratio present in the parameters.
    """
    return {key:params[key] for key in MODEL_KEYS if key in params}

def complex_fields(name,value):
    """
    Split a complex value into real and imaginary JSON fields.
    """
    return {f"{name}_re":float(np.real(value)), f"{name}_im":float(np.imag(value))}

class Experiment:
    """
    Base class of the experiments.

    Attributes:
        params (dict): Resolved parameters.
        folder (str): Work folder.
        jobs (int): Number of worker processes for sweeps.
        artifacts (list): Names of the written files.
    """

    def __init__(self,params,folder,jobs=1):
        self.params = params
        self.folder = folder
        self.jobs = max(1,int(jobs))
        self.artifacts = []

    def path(self,name):
        """
        Register an artifact and return its path.
        """
        self.artifacts.append(name)
        return os.path.join(self.folder,name)

    def map(self,function,*iterables):
        """
        Ordered map over sweep points, in a process pool when more than one job is requested.
        """
        if self.jobs == 1:
            return list(map(function,*iterables))
        with ProcessPoolExecutor(max_workers=self.jobs) as executor:
            return list(executor.map(function,*iterables))

    def run(self):
        raise NotImplementedError

class EigenmodesExperiment(Experiment):
    """
    Eigenmodes of a trap, couplings and the comparison with the closed forms.
    """

    def run(self):
        params = self.params
        model = TrapModel.from_gap_ratio(params["dg_ratio"],**model_kwargs(params))
        fh, sh = model.fh_modes, model.sh_modes

        write_eigenmodes(self.path("fh_modes.csv"),fh)
        write_eigenmodes(self.path("sh_modes.csv"),sh)
        n = min(fh.eigenvalues.size,sh.eigenvalues.size)
        write_results(self.path("eigenvalues.csv"),["m","lambda_fh","lambda_sh"],
                      np.column_stack((np.arange(n),fh.eigenvalues[:n],sh.eigenvalues[:n])))
        tensors = model.tensors
        write_results(self.path("coupling.csv"),["l","g_l00_re","g_l00_im","delta_l00"],
                      np.column_stack((np.arange(tensors.g_lmn.shape[0]),tensors.g_lmn[:,0,0].real,
                                       tensors.g_lmn[:,0,0].imag,tensors.delta_lmn[:,0,0])))

        violations = model.leakage_violations()
        summary = {"g":model.g,
                   "delta_a":fh.gap,
                   "delta_b":sh.gap,
                   "dg_ratio_numerical":model.dg_ratio,
                   "n_bound_fh":fh.n_bound,
                   "n_bound_sh":sh.n_bound,
                   "delta_000":float(tensors.delta_lmn[0,0,0]),
                   "leakage_bound_violations":[list(violation) for violation in violations]}
        if model.potential.kind == "sech_family":
            analytic = analytic_bound_modes(model.potential.alpha,model.rho,model.potential.xi0)
            xi = model.grid.xi
            summary["analytic"] = {"q_a":analytic.q_a,
                                   "q_b":analytic.q_b,
                                   "delta_a":analytic.delta_a,
                                   "delta_b":analytic.delta_b,
                                   "matching_offset":analytic.matching_offset,
                                   "g":float(effective_g_general(model.potential.alpha,model.rho,model.potential.xi0,model.r_norm)),
                                   "l2_error_fh":float(np.sqrt(model.grid.integrate(np.abs(fh.ground-analytic.psi_a(xi))**2))),
                                   "l2_error_sh":float(np.sqrt(model.grid.integrate(np.abs(sh.ground-analytic.psi_b(xi))**2)))}
        dump_json(self.path("summary.json"),summary)

class RabiExperiment(Experiment):
    """
    Rabi oscillation of a trapped two-photon state.
    """

    def run(self):
        params = self.params
        model = TrapModel.from_gap_ratio(params["dg_ratio"],**model_kwargs(params))
        trajectory = rabi_trace(params["dg_ratio"],params["dt"],params["oversample"],params["periods"],model=model)

        write_trajectory(self.path("trace.csv"),trajectory)
        if params["flux_every"]:
            write_flux_snapshots(self.path("fluxes.csv"),trajectory,params["flux_every"])
        if params["checkpoint"]:
            save_checkpoint(self.path("final_state.bin"),trajectory.final_state)

        n_sh = trajectory.series("n_sh")
        summary = {"t_pi_analytic":model.t_pi_seed,
                   "t_pi_numerical_g":float(np.sqrt(2)*np.pi/model.g),
                   "max_n_sh":float(np.max(n_sh)),
                   "steps":trajectory.steps}
        if params["periods"] >= 1.5:
            summary["rabi_period"] = float(rabi_period(trajectory,model.t_pi_seed))
        dump_json(self.path("summary.json"),summary)

class UpiExperiment(Experiment):
    """
    Kerr-phase gate on the one- and two-photon inputs.
    """

    def run(self):
        params = self.params
        run = run_upi(params["dg_ratio"],params["dt"],params["sample_every"],**model_kwargs(params))

        if params["sample_every"]:
            write_trajectory(self.path("trace.csv"),run.traj)
        if params["checkpoint"]:
            save_checkpoint(self.path("final_state.bin"),run.traj.final_state)

        summary = {"dg_ratio":run.dg_ratio,
                   "t_pi":run.t_pi,
                   **complex_fields("s1",run.s1),
                   **complex_fields("s2",run.s2),
                   **complex_fields("c01",run.c01),
                   "leak2":run.leak2,
                   "dist":run.dist}
        dump_json(self.path("summary.json"),summary)

class CZSweepExperiment(Experiment):
    """
    CZ gate error against the gap to coupling ratio.
    """

    def run(self):
        params = self.params
        dg_ratios = [float(value) for value in params["dg_ratios"]]
        logger.info(f"###### CZ sweep over Delta/g = {dg_ratios} ######")
        results = self.map(partial(cz_error,dt=params["dt"],**model_kwargs(params)),dg_ratios)

        rows = [[result.dg_ratio,result.epsilon,result.amplitudes[1].real,result.amplitudes[1].imag,
                 result.amplitudes[2].real,result.amplitudes[2].imag,result.t_pi] for result in results]
        write_results(self.path("epsilon.csv"),["dg_ratio","epsilon","s1_re","s1_im","s2_re","s2_im","t_pi_located"],rows)

        epsilon = [result.epsilon for result in results]
        summary = {"dg_ratios":dg_ratios,"epsilon":epsilon,"leakage":[result.leakage for result in results],
                   "monotonic":is_monotonic_decreasing(epsilon)}
        if len(results) >= 2 and min(epsilon) > 0:
            summary["slope"], summary["residual"] = loglog_slope(dg_ratios,epsilon)
        dump_json(self.path("summary.json"),summary)

class GaussianSweepExperiment(Experiment):
    """
    Untrapped Gaussian baseline over gate times and waveform widths.
    """

    def run(self):
        params = self.params
        dt = 1e-3 if params["dt"] is None else params["dt"]
        box = params["box"]
        keywords = {key:params[key] for key in ("n_grid","rho","r_norm")}
        if box is not None:
            keywords["box"] = box
        if self.jobs == 1:
            surface = gaussian_baseline(params["t_pi_grid"],params["tau_g_grid"],dt,**keywords)
        else:
            with ProcessPoolExecutor(max_workers=self.jobs) as executor:
                surface = gaussian_baseline(params["t_pi_grid"],params["tau_g_grid"],dt,executor_map=executor.map,**keywords)

        rows = []
        for i, t_pi in enumerate(surface.t_pi_grid):
            for j, tau_g in enumerate(surface.tau_g_grid):
                rows.append([t_pi,tau_g,surface.dist[i,j],surface.s2[i,j].real,surface.s2[i,j].imag])
        write_results(self.path("dist.csv"),["t_pi","tau_g","dist","s2_re","s2_im"],rows)

        summary = {"t_pi_grid":surface.t_pi_grid.tolist(),
                   "tau_g_opt":surface.tau_g_opt.tolist(),
                   "tau_g_refined":[float(value) for value in surface.tau_g_refined],
                   "dist_opt":np.min(surface.dist,axis=1).tolist()}
        dump_json(self.path("summary.json"),summary)

class FomExperiment(Experiment):
    """
    Figure-of-merit table of platform records.
    """

    def run(self):
        platforms = [Platform.from_record(record) for record in self.params["platforms"]]
        headers, rows = evaluate_platforms(platforms)
        write_table(self.path("table.csv"),headers,rows)

experiments = {"eigenmodes":EigenmodesExperiment, "rabi":RabiExperiment, "upi":UpiExperiment,
               "cz-sweep":CZSweepExperiment, "gaussian-sweep":GaussianSweepExperiment, "fom":FomExperiment}
