'''
Propagation physics: free-space and clutter path loss, the RSRP estimate, and
the RSSI/RSRQ identity.

    PathLossModelClass: alpha(p) with FSPL, log-distance clutter and external kinds.
    RadioEstimateClass: alpha and beta for one link.
    radio_identities: closed-form dB bookkeeping.
'''

# Grab classes.
from radio_metrics.propagation.radio_identities import N_RESOURCE_BLOCKS, fspl_db, rsrp_estimate, compose_prediction, rssi_from_rsrp_rsrq, rsrq_from_rsrp_rssi
from radio_metrics.propagation.PathLossModelClass import PathLossModel, PathLossKind, path_loss_estimate, register_path_loss, unregister_path_loss
from radio_metrics.propagation.RadioEstimateClass import RadioEstimate
