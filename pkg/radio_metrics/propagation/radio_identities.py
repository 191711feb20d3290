'''
radio_identities.py: LTE power bookkeeping.

    fspl_db: free-space path loss.
    rsrp_estimate: TxPwr - path loss - 10*log10(12*N).
    compose_prediction: correction + estimate (or the bare correction in direct mode).
    rssi_from_rsrp_rsrq / rsrq_from_rsrp_rssi: dB form of RSRQ = N * RSRP / RSSI.
'''

# Python imports.
import math

# Other imports.
from radio_metrics.errors import PathLossModelError

N_RESOURCE_BLOCKS = 100
SUBCARRIERS_PER_RB = 12
FSPL_CONSTANT_DB = 32.44778


def _check_n_rb(n_rb):
    if isinstance(n_rb, bool) or int(n_rb) != n_rb or n_rb < 1:
        raise ValueError("(radio_metrics) Radio Error: resource block count must be an integer >= 1, got " + repr(n_rb) + ".")
    return int(n_rb)


def fspl_db(frequency_mhz, distance_km):
    '''
    Args:
        frequency_mhz (float)
        distance_km (float)

    Returns:
        (float): 32.44778 + 20*log10(f) + 20*log10(d).
    '''
    if not frequency_mhz > 0 or not distance_km > 0:
        raise PathLossModelError("(radio_metrics) Path Loss Error: frequency and distance must be positive, got ("
                                 + repr(frequency_mhz) + " MHz, " + repr(distance_km) + " km).")
    return FSPL_CONSTANT_DB + 20.0 * math.log10(frequency_mhz) + 20.0 * math.log10(distance_km)


def rsrp_estimate(tx_power_dbm, alpha_db, n_rb=N_RESOURCE_BLOCKS):
    n_rb = _check_n_rb(n_rb)
    return tx_power_dbm - alpha_db - 10.0 * math.log10(SUBCARRIERS_PER_RB * n_rb)


def compose_prediction(beta_dbm, correction_db, residual=True):
    '''
    Args:
        beta_dbm (float or np.ndarray): initial RSRP estimate.
        correction_db (float or np.ndarray): network output.
        residual (bool): False for metrics predicted directly by the network (RSRQ).

    Returns:
        (float or np.ndarray)
    '''
    if not residual:
        return correction_db
    return correction_db + beta_dbm


def rssi_from_rsrp_rsrq(rsrp_dbm, rsrq_db, n_rb=N_RESOURCE_BLOCKS):
    n_rb = _check_n_rb(n_rb)
    return rsrp_dbm - rsrq_db + 10.0 * math.log10(n_rb)


def rsrq_from_rsrp_rssi(rsrp_dbm, rssi_dbm, n_rb=N_RESOURCE_BLOCKS):
    n_rb = _check_n_rb(n_rb)
    return rsrp_dbm - rssi_dbm + 10.0 * math.log10(n_rb)
