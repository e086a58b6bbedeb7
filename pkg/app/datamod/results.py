"""
This module contains functions to handle the result files.

Every table is written in one pinned CSV dialect: UTF-8, comma separator, '.' decimal
mark, a single header row and LF line endings. Numbers are formatted with a fixed
precision so that identical runs produce byte-identical files.

Attributes:
    FLOAT_FORMAT (str): printf-style format of every floating point cell.
    CHECKPOINT_MAGIC (bytes): First eight bytes of a state checkpoint.
"""

# Import native packages
import os
import struct

# Import pypi packages
import numpy as np

FLOAT_FORMAT = "%.12e"
CHECKPOINT_MAGIC = b"TTRAP1\0\0"
CHECKPOINT_HEADER = struct.Struct("<8sII")

def format_cell(value):
    """
    Format one table cell, None gives an empty cell.
    """
    if value is None:
        return ""
    if isinstance(value,str):
        return value
    if isinstance(value,(bool,np.bool_)):
        return str(int(value))
    if isinstance(value,(int,np.integer)):
        return str(int(value))

    return FLOAT_FORMAT % value

def write_table(file,headers,rows):
    """
    Write a table in the pinned CSV dialect.

    Args:
        file (str): Path and name of the CSV file.
        headers (list): Column names.
        rows (list/np.array): Rows of cells, numbers, strings or None.

    Raises:
        ValueError: If a row does not match the header width.
    """
    cells = [[format_cell(value) for value in row] for row in rows]
    for row in cells:
        if len(row) != len(headers):
            raise ValueError(f"Row of width {len(row)} does not match {len(headers)} headers")

    with open(file,"w",encoding="utf-8",newline="\n") as f:
        f.write(",".join(headers))
        f.write("\n")
        if cells:
            np.savetxt(f,np.array(cells,dtype=object),fmt="%s",delimiter=",",newline="\n")

def write_results(file,headers,data):
    """
    Write a purely numerical table.

    Args:
        file (str): Path and name of the CSV file.
        headers (list): Column names.
        data (np.array): Two dimensional array of samples.
    """
    data = np.atleast_2d(np.asarray(data,dtype=float))
    if data.shape[1] != len(headers):
        raise ValueError(f"Data of width {data.shape[1]} does not match {len(headers)} headers")

    with open(file,"w",encoding="utf-8",newline="\n") as f:
        f.write(",".join(headers))
        f.write("\n")
        np.savetxt(f,data,fmt=FLOAT_FORMAT,delimiter=",",newline="\n")

def load_results(file):
    """
    Loads a numerical table written by write_results.

    Args:
        file (str): Path and name of the CSV file.

    Returns:
        col_names (np.array): Column names.
        data (np.array): Samples.
    """
    col_names = np.loadtxt(file,max_rows=1,dtype=str,delimiter=",")
    data = np.loadtxt(file,skiprows=1,delimiter=",",ndmin=2)

    return col_names, data

def write_trajectory(file,trajectory):
    """
    Write the observable time series of a trajectory.

    Args:
        file (str): Path and name of the CSV file.
        trajectory (propmod.propagator.Trajectory): Sampled propagation.
    """
    headers = ["t","n_sh","X","Y","Z","norm","mr"]
    data = [[record.t,record.n_sh,*record.bloch,record.norm,record.mr] for record in trajectory.records]
    write_results(file,headers,data)

def write_flux_snapshots(file,trajectory,every=1):
    """
    Write FH and SH flux profiles of every ``every``-th sample in long format.

    Args:
        file (str): Path and name of the CSV file.
        trajectory (propmod.propagator.Trajectory): Sampled propagation.
        every (int): Snapshot stride over the samples.
    """
    xi = trajectory.final_state.grid.xi
    blocks = []
    for record in trajectory.records[::max(1,int(every))]:
        blocks.append(np.column_stack((np.full_like(xi,record.t),xi,record.fh_flux,record.sh_flux)))
    write_results(file,["t","xi","fh_flux","sh_flux"],np.concatenate(blocks))

def write_eigenmodes(file,modeset):
    """
    Write grid-sampled eigenmodes with columns xi, re_psi_m, im_psi_m per mode.

    Args:
        file (str): Path and name of the CSV file.
        modeset (trapmod.EigenmodeSet): Eigenmodes of one harmonic.
    """
    headers = ["xi"]
    columns = [modeset.grid.xi]
    for m, mode in enumerate(modeset.modes):
        headers += [f"re_psi_{m}",f"im_psi_{m}"]
        columns += [mode.real,mode.imag]
    write_results(file,headers,np.column_stack(columns))

def save_checkpoint(file,state):
    """
    Dump (P, Q, R, S) as little-endian complex doubles after a 16-byte header.

    The header holds the magic ``TTRAP1\\0\\0``, the grid size as u32 and a reserved u32.

    Args:
        file (str): Path and name of the binary file.
        state (propmod.state.TwoPhotonState): State to dump.
    """
    n = state.grid.n
    payload = np.concatenate(([state.P],state.Q,state.R.ravel(),state.S)).astype("<c16")
    with open(file,"wb") as f:
        f.write(CHECKPOINT_HEADER.pack(CHECKPOINT_MAGIC,n,0))
        f.write(payload.tobytes())

def load_checkpoint(file):
    """
    Read a checkpoint written by save_checkpoint.

    Args:
        file (str): Path and name of the binary file.

    Returns:
        n (int): Grid size.
        P (complex): Vacuum amplitude.
        Q (np.array): One-photon FH amplitude.
        R (np.array): Two-photon FH amplitude.
        S (np.array): One-photon SH amplitude.

    Raises:
        ValueError: On a wrong magic or truncated payload.
    """
    with open(file,"rb") as f:
        header = f.read(CHECKPOINT_HEADER.size)
        raw = f.read()
    if len(header) != CHECKPOINT_HEADER.size:
        raise ValueError(f"{os.path.basename(file)} is not a checkpoint, header too short")
    magic, n, _ = CHECKPOINT_HEADER.unpack(header)
    if magic != CHECKPOINT_MAGIC:
        raise ValueError(f"{os.path.basename(file)} is not a checkpoint, bad magic {magic!r}")

    payload = np.frombuffer(raw,dtype="<c16")
    if payload.size != 1+2*n+n*n:
        raise ValueError(f"Checkpoint payload has {payload.size} values, expected {1+2*n+n*n}")
    P = complex(payload[0])
    Q = payload[1:1+n].astype(complex)
    R = payload[1+n:1+n+n*n].reshape(n,n).astype(complex)
    S = payload[1+n+n*n:].astype(complex)

    return n, P, Q, R, S
