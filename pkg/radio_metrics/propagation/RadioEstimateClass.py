''' RadioEstimateClass.py: Contains the RadioEstimate class (path loss and the RSRP estimate beta). '''

# Python imports.
from dataclasses import dataclass

# Other imports.
from radio_metrics.propagation.radio_identities import N_RESOURCE_BLOCKS, rsrp_estimate


@dataclass(frozen=True)
class RadioEstimate(object):
    alpha_db: float
    beta_dbm: float
    tx_power_dbm: float
    n_resource_blocks: int = N_RESOURCE_BLOCKS

    @classmethod
    def from_path_loss(cls, tx_power_dbm, alpha_db, n_rb=N_RESOURCE_BLOCKS):
        ''' Builds the estimate so beta = TxPwr - alpha - 10*log10(12*N) holds exactly. '''
        return cls(alpha_db, rsrp_estimate(tx_power_dbm, alpha_db, n_rb), tx_power_dbm, int(n_rb))

    @classmethod
    def for_features(cls, model, p, tx_power_dbm, n_rb=N_RESOURCE_BLOCKS):
        '''
        Args:
            model (PathLossModel)
            p (PathLossFeatures)
            tx_power_dbm (float)
            n_rb (int)
        '''
        return cls.from_path_loss(tx_power_dbm, model.estimate(p), n_rb)

    def __str__(self):
        return "estimate(alpha=" + str(round(self.alpha_db, 3)) + " dB, beta=" + str(round(self.beta_dbm, 3)) + " dBm)"
