package io.swiftbrowse.tabs;

import android.content.Context;
import android.webkit.WebSettings;
import android.webkit.WebView;
import android.widget.FrameLayout;

import java.util.ArrayList;
import java.util.List;

public class TabManager {
    private final Context context;
    private final FrameLayout container;
    private final List<BrowserTab> tabs = new ArrayList<>();
    private int current = -1;

    public TabManager(Context context, FrameLayout container) {
        this.context = context;
        this.container = container;
    }

    public BrowserTab openTab(String url, boolean incognito) {
        WebView webView = new WebView(context);
        WebSettings settings = webView.getSettings();
        settings.setJavaScriptEnabled(true);
        settings.setDomStorageEnabled(!incognito);
        webView.setWebViewClient(new BlockingWebViewClient());
        webView.loadUrl(url);
        BrowserTab tab = new BrowserTab(webView, incognito);
        tabs.add(tab);
        switchTo(tabs.size() - 1);
        return tab;
    }

    public void closeTab(int index) {
        BrowserTab tab = tabs.remove(index);
        tab.getWebView().destroy();
        if (tabs.isEmpty()) {
            current = -1;
            container.removeAllViews();
        } else {
            switchTo(Math.min(index, tabs.size() - 1));
        }
    }

    public void switchTo(int index) {
        current = index;
        container.removeAllViews();
        container.addView(tabs.get(index).getWebView());
    }

    public BrowserTab currentTab() {
        return tabs.get(current);
    }
}
