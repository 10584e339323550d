class DotStyle:
    WORLD_SHAPE = "circle"
    ACTION_SHAPE = "box"
    EDGE_STYLE = "solid"
