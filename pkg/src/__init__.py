# Pointless curves over F_q(x)
