from django.apps import AppConfig


class CosmeticConfig(AppConfig):
    name = 'cosmetic'
    verbose_name = 'Cosmetic surgery'

    def ready(self):
        # registers the COSMETIC_* defaults on django.conf.settings
        import cosmetic.conf  # noqa: F401
