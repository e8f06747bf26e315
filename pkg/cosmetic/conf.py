# -*- coding: utf-8 -*-
from django.conf import settings
from appconf import AppConf


class CosmeticConf(AppConf):
    REDUCE_SLOPES = False
    SEARCH_WORKERS = 1
    SEARCH_CHUNK_SIZE = 32
    FAMILY_K_MAX = 10000
    SWAP_MAX_P = 500
