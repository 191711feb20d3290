'''
CorrectionNetworkClass.py: Contains the CorrectionNetwork class, a fully connected
regressor y[x, beta] with leaky rectifier hidden layers and a linear scalar output.

Inputs are the standardized engineered features with the (standardized) RSRP
estimate appended as the last column.
'''

# Python imports.
import math

# Other imports.
import numpy as np

from radio_metrics.correction.ArchitectureClass import Architecture
from radio_metrics.correction.losses import msle_grad, msle_loss
from radio_metrics.errors import NetworkShapeError, NonFiniteLossError


class CorrectionNetwork(object):

    def __init__(self, architecture, weights, biases):
        '''
        Args:
            architecture (Architecture)
            weights (list of np.ndarray): layer l has shape (fan_in, width_l).
            biases (list of np.ndarray): layer l has shape (width_l,).
        '''
        self.architecture = architecture
        self.weights = [np.array(w, dtype=np.float64) for w in weights]
        self.biases = [np.array(b, dtype=np.float64) for b in biases]
        if len(self.weights) != architecture.num_layers or len(self.biases) != architecture.num_layers:
            raise NetworkShapeError("(radio_metrics) Network Error: expected " + str(architecture.num_layers) + " layers.")
        fan_in = self.weights[0].shape[0] if self.weights[0].ndim == 2 else 0
        if fan_in < 1:
            raise NetworkShapeError("(radio_metrics) Network Error: input dimension must be >= 1.")
        for w, b, width in zip(self.weights, self.biases, architecture.widths):
            if w.shape != (fan_in, width) or b.shape != (width,):
                raise NetworkShapeError("(radio_metrics) Network Error: layer shape " + str(w.shape) + " does not match ("
                                        + str(fan_in) + ", " + str(width) + ").")
            fan_in = width

    @classmethod
    def init(cls, architecture, input_dim, seed=0):
        '''
        Args:
            architecture (Architecture)
            input_dim (int): feature count plus one for the appended estimate.
            seed (int)

        Returns:
            (CorrectionNetwork): normal weights scaled by 1/sqrt(fan_in), zero biases.
        '''
        if int(input_dim) != input_dim or input_dim < 1:
            raise NetworkShapeError("(radio_metrics) Network Error: input dimension must be >= 1, got " + repr(input_dim) + ".")
        rng = np.random.default_rng(seed)
        weights, biases = [], []
        fan_in = int(input_dim)
        for width in architecture.widths:
            weights.append(rng.standard_normal((fan_in, width)) / math.sqrt(fan_in))
            biases.append(np.zeros(width))
            fan_in = width
        return cls(architecture, weights, biases)

    @classmethod
    def zeros(cls, architecture, input_dim):
        fan_ins = [int(input_dim)] + list(architecture.widths[:-1])
        return cls(architecture, [np.zeros((f, w)) for f, w in zip(fan_ins, architecture.widths)],
                   [np.zeros(w) for w in architecture.widths])

    @property
    def input_dim(self):
        return self.weights[0].shape[0]

    @property
    def params(self):
        ''' Weights then biases, layer by layer; the arrays are live references. '''
        result = []
        for w, b in zip(self.weights, self.biases):
            result.extend([w, b])
        return result

    def copy(self):
        return CorrectionNetwork(self.architecture, [w.copy() for w in self.weights], [b.copy() for b in self.biases])

    # -------------
    # -- Forward --
    # -------------

    def _check_inputs(self, inputs):
        inputs = np.asarray(inputs, dtype=np.float64)
        single = inputs.ndim == 1
        if single:
            inputs = inputs[None, :]
        if inputs.ndim != 2 or inputs.shape[1] != self.input_dim:
            raise NetworkShapeError("(radio_metrics) Network Error: expected " + str(self.input_dim) + " inputs, got shape "
                                    + str(inputs.shape) + ".")
        return inputs, single

    def _forward(self, inputs):
        slope = self.architecture.negative_slope
        pre, act = [], [inputs]
        a = inputs
        last = len(self.weights) - 1
        for l, (w, b) in enumerate(zip(self.weights, self.biases)):
            z = a @ w + b
            pre.append(z)
            a = z if l == last else np.where(z > 0, z, slope * z)
            act.append(a)
        return pre, act

    def predict(self, inputs):
        '''
        Args:
            inputs (np.ndarray): (n, input_dim) or a single row.

        Returns:
            (np.ndarray or float)
        '''
        inputs, single = self._check_inputs(inputs)
        out = self._forward(inputs)[1][-1][:, 0]
        return float(out[0]) if single else out

    def forward(self, x, beta):
        '''
        Args:
            x (np.ndarray): standardized features, (n, d) or (d,).
            beta (np.ndarray or float): appended estimate column.
        '''
        x = np.asarray(x, dtype=np.float64)
        if x.ndim == 1:
            return self.predict(np.append(x, float(beta)))
        beta = np.asarray(beta, dtype=np.float64).reshape(-1, 1)
        return self.predict(np.hstack([x, beta]))

    # ---------------
    # -- Gradients --
    # ---------------

    def _backward(self, pre, act, d_out):
        slope = self.architecture.negative_slope
        grads_w = [None] * len(self.weights)
        grads_b = [None] * len(self.weights)
        delta = d_out[:, None]
        for l in range(len(self.weights) - 1, -1, -1):
            grads_w[l] = act[l].T @ delta
            grads_b[l] = delta.sum(axis=0)
            delta = delta @ self.weights[l].T
            if l > 0:
                delta = delta * np.where(pre[l - 1] > 0, 1.0, slope)
        return grads_w, grads_b, delta

    def gradients(self, inputs, targets, alpha=5.0):
        '''
        Returns:
            (tuple): (loss, weight gradients, bias gradients) of the msle loss.
        '''
        inputs, _ = self._check_inputs(inputs)
        pre, act = self._forward(inputs)
        y = act[-1][:, 0]
        loss = msle_loss(y, targets, alpha)
        grads_w, grads_b, _ = self._backward(pre, act, msle_grad(y, targets, alpha))
        return loss, grads_w, grads_b

    def input_gradients(self, inputs, targets, alpha=5.0):
        ''' dL/dinputs, including the appended estimate column. '''
        inputs, _ = self._check_inputs(inputs)
        pre, act = self._forward(inputs)
        y = act[-1][:, 0]
        return self._backward(pre, act, msle_grad(y, targets, alpha))[2]

    # -----------------
    # -- Persistence --
    # -----------------

    def shapes(self):
        return [list(w.shape) for w in self.weights], [list(b.shape) for b in self.biases]

    def to_blob(self):
        ''' Little-endian float64 bytes, weights then biases per layer. '''
        return b"".join(np.ascontiguousarray(p, dtype="<f8").tobytes() for p in self.params)

    @classmethod
    def from_blob(cls, architecture, input_dim, blob):
        fan_ins = [int(input_dim)] + list(architecture.widths[:-1])
        expected = sum(f * w + w for f, w in zip(fan_ins, architecture.widths)) * 8
        if len(blob) != expected:
            raise NetworkShapeError("(radio_metrics) Network Error: weight blob has " + str(len(blob)) + " bytes, expected "
                                    + str(expected) + ".")
        flat = np.frombuffer(blob, dtype="<f8")
        weights, biases = [], []
        offset = 0
        for f, w in zip(fan_ins, architecture.widths):
            weights.append(flat[offset:offset + f * w].reshape(f, w).astype(np.float64))
            offset += f * w
            biases.append(flat[offset:offset + w].astype(np.float64))
            offset += w
        return cls(architecture, weights, biases)

    def __eq__(self, other):
        return (isinstance(other, CorrectionNetwork) and self.architecture == other.architecture
                and all(np.array_equal(a, b) for a, b in zip(self.params, other.params)))

    def __str__(self):
        return "correction-net(" + str(self.input_dim) + " -> " + str(self.architecture) + ")"


def init_network(architecture, input_dim, seed=0):
    return CorrectionNetwork.init(architecture, input_dim, seed)


def train_step(network, optimizer, inputs, targets, config, step=None):
    '''
    Args:
        network (CorrectionNetwork): updated in place.
        optimizer (AdamWOptimizer)
        inputs (np.ndarray)
        targets (np.ndarray)
        config (TrainConfig)
        step (int): reported in diagnostics.

    Returns:
        (tuple): (network, batch loss before the update)

    Raises:
        NonFiniteLossError
    '''
    loss, grads_w, grads_b = network.gradients(inputs, targets, config.loss_alpha)
    grads = []
    for gw, gb in zip(grads_w, grads_b):
        grads.extend([gw, gb])
    if not math.isfinite(loss) or not all(np.all(np.isfinite(g)) for g in grads):
        raise NonFiniteLossError("(radio_metrics) Training Error: non-finite loss.",
                                 {"loss": loss, "step": step if step is not None else optimizer.t + 1,
                                  "batch_size": len(targets), "learning_rate": optimizer.learning_rate,
                                  "max_abs_weight": max(float(np.max(np.abs(p))) for p in network.params)})
    optimizer.step(network.params, grads)
    return network, loss
