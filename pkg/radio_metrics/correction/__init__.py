'''
The correction network and its training primitives.

    ArchitectureClass: trunk and head widths.
    TrainConfigClass: batch size, learning rate, decay, stopping.
    CorrectionNetworkClass: forward pass, backprop, weight blobs.
    AdamWOptimizerClass: decoupled-decay adaptive moments.
    losses: msle.
'''

# Grab classes.
from radio_metrics.correction.ArchitectureClass import Architecture
from radio_metrics.correction.TrainConfigClass import TrainConfig
from radio_metrics.correction.CorrectionNetworkClass import CorrectionNetwork, init_network, train_step
from radio_metrics.correction.AdamWOptimizerClass import AdamWOptimizer
from radio_metrics.correction.losses import msle_loss, msle_grad, mse_loss
