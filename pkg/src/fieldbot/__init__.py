"""fieldbot: humanoid soccer robot software stack.

Subpackages: core (types/config), vision (camera pipeline), gait (walk
engine and leg kinematics), estimation (localisation and fall detection),
behaviour (gameplay decisions), netcomm (team/game-controller UDP),
simworld (kinematic simulator and synthetic camera), agent (runtime loops
and CLI).
"""

__version__ = "0.1.0"
