# -*- coding: utf-8 -*-
"""Definitions."""

SCENARIO_EIGENVALUES = 'eigs'
SCENARIO_EVOLVE = 'evolve'
SCENARIO_KERNEL = 'kernel'
SCENARIO_CONTROL = 'control'
SCENARIO_DECAY = 'decay'
SCENARIO_COHERENT = 'coherent'
SCENARIO_SQUEEZE = 'squeeze'
SCENARIO_SIMULATE = 'simulate'

SCENARIO_NAMES = frozenset([
    SCENARIO_COHERENT,
    SCENARIO_CONTROL,
    SCENARIO_DECAY,
    SCENARIO_EIGENVALUES,
    SCENARIO_EVOLVE,
    SCENARIO_KERNEL,
    SCENARIO_SIMULATE,
    SCENARIO_SQUEEZE])

FLOW_COHERENT = 'coherent'
FLOW_DECAY = 'decay'
FLOW_EXCITED = 'excited'
FLOW_ORNSTEIN_UHLENBECK = 'ou'
FLOW_SQUEEZE = 'squeeze'
FLOW_STATIONARY = 'stationary'
FLOW_TRANSITION = 'transition'

FLOW_NAMES = frozenset([
    FLOW_COHERENT,
    FLOW_DECAY,
    FLOW_EXCITED,
    FLOW_ORNSTEIN_UHLENBECK,
    FLOW_SQUEEZE,
    FLOW_STATIONARY,
    FLOW_TRANSITION])

KERNEL_NAMES = frozenset([
    FLOW_EXCITED,
    FLOW_ORNSTEIN_UHLENBECK])

METHOD_BOTH = 'both'
METHOD_FINITE_DIFFERENCES = 'fd'
METHOD_GRID = 'grid'
METHOD_SHOOTING = 'shooting'
METHOD_SPECTRAL = 'spectral'

METHOD_NAMES = frozenset([
    METHOD_BOTH,
    METHOD_FINITE_DIFFERENCES,
    METHOD_GRID,
    METHOD_SHOOTING,
    METHOD_SPECTRAL])

FORMULA_DESCRIPTIONS = {
    'coherent_coefficients': (
        'W_k = (4 w^2 - 2 w w_k) / ((w_k - w)^2 + w^2), c_k = (-1)^(k+1) '
        'C(N, k), w_k = k ln(N) / tau'),
    'coherent_transition': (
        'F(t) = 1 - (1 - exp(-Wt))^N, mu\' = a w (cos wt - sin wt) F - w mu, '
        'V = m w^2 x^2 / 2 - m (mu\'\' + w^2 mu) x'),
    'control': (
        'S = m W - (hbar / 2) ln(sigma0 rho) - theta, V = (hbar^2 / 4m) L\'\' '
        '+ (hbar / 2)(dL/dt + v L\') - m v^2 / 2 - m dW/dt + theta\''),
    'decay_mixture': (
        'rho(x, t) = (1 - exp(-2wt)) rho0(x) + exp(-2wt) rho1(x)'),
    'decay_potential': (
        'V = m w^2 x^2 / 2 - 2 hbar w U(x / sigma0; b), '
        'U = (X^4 + b^2 X^2 - b^2) / (b^2 + X^2)^2, b^2 = exp(2wt) - 1'),
    'eigenvalues': (
        'D G\'\' - q G = -lambda G, q = v^2 / 4D + v\' / 2, mu = lambda / w'),
    'evolve': (
        'd(rho)/dt = -d(v rho)/dx + D d2(rho)/dx2 with zero flux through '
        'the nodes of v'),
    'excited_asymptote': (
        'Gamma(eps; x) rho1(x), Gamma = eps Theta(x) + (2 - eps) Theta(-x)'),
    'excited_kernel': (
        'p1 = Theta(x x0)(x / alpha)[N(x; alpha, s) - N(x; -alpha, s)], '
        'alpha = x0 exp(-w(t - t0)), s = sigma0^2 (1 - exp(-2w(t - t0)))'),
    'ou_kernel': (
        'p0 = N(x; x0 exp(-w(t - t0)), sigma0^2 (1 - exp(-2w(t - t0))))'),
    'simulate': (
        'dx = v(x, t) dt + sqrt(2 D dt) z, Euler-Maruyama with node '
        'rejection'),
    'squeeze_schedule': (
        'nu = sigma0^2 ((b + e) / (1 + e))^2, e = exp(-t / tau), '
        'V = (m / 2)[omega2 x^2 + c], S = (m / 2)[Omega x^2 + Delta]')}
