''' AdamWOptimizerClass.py: Contains the AdamWOptimizer class (adaptive moments with decoupled weight decay). '''

# Other imports.
import numpy as np


class AdamWOptimizer(object):

    def __init__(self, learning_rate, weight_decay=0.0, beta1=0.9, beta2=0.999, eps=1e-8):
        self.learning_rate = float(learning_rate)
        self.weight_decay = float(weight_decay)
        self.beta1 = beta1
        self.beta2 = beta2
        self.eps = eps
        self.t = 0
        self.m = None
        self.v = None

    def reset(self):
        self.t = 0
        self.m = None
        self.v = None

    def step(self, params, grads):
        '''
        Args:
            params (list of np.ndarray): updated in place.
            grads (list of np.ndarray): same shapes as @params.

        Summary:
            p -= lr * (m_hat / (sqrt(v_hat) + eps) + wd * p)
        '''
        if self.m is None:
            self.m = [np.zeros_like(p) for p in params]
            self.v = [np.zeros_like(p) for p in params]
        self.t += 1
        bias1 = 1.0 - self.beta1 ** self.t
        bias2 = 1.0 - self.beta2 ** self.t
        for p, g, m, v in zip(params, grads, self.m, self.v):
            m *= self.beta1
            m += (1.0 - self.beta1) * g
            v *= self.beta2
            v += (1.0 - self.beta2) * g * g
            m_hat = m / bias1
            v_hat = v / bias2
            p -= self.learning_rate * (m_hat / (np.sqrt(v_hat) + self.eps) + self.weight_decay * p)

    def __str__(self):
        return "adamw(lr=" + str(self.learning_rate) + ",wd=" + str(self.weight_decay) + ")"
