'''
losses.py: Mean squared log-scaled error.

    msle = mean(alpha^2 * ln(1 + (e / alpha)^2)), e = prediction - target.

Quadratic for |e| << alpha and logarithmic for |e| >> alpha.
'''

# Other imports.
import numpy as np


def _errors(predictions, targets, alpha):
    predictions = np.asarray(predictions, dtype=np.float64).reshape(-1)
    targets = np.asarray(targets, dtype=np.float64).reshape(-1)
    if predictions.shape != targets.shape:
        raise ValueError("(radio_metrics) Loss Error: " + str(predictions.size) + " predictions for " + str(targets.size) + " targets.")
    if predictions.size == 0:
        raise ValueError("(radio_metrics) Loss Error: empty batch.")
    if not alpha > 0:
        raise ValueError("(radio_metrics) Loss Error: alpha must be positive, got " + repr(alpha) + ".")
    return predictions - targets


def msle_loss(predictions, targets, alpha=5.0):
    e = _errors(predictions, targets, alpha)
    return float(np.mean(alpha * alpha * np.log1p((e / alpha) ** 2)))


def msle_grad(predictions, targets, alpha=5.0):
    '''
    Returns:
        (np.ndarray): dL/dprediction, i.e. 2e / (1 + (e/alpha)^2) / n.
    '''
    e = _errors(predictions, targets, alpha)
    return 2.0 * e / (1.0 + (e / alpha) ** 2) / e.size


def mse_loss(predictions, targets):
    e = _errors(predictions, targets, 1.0)
    return float(np.mean(e * e))
