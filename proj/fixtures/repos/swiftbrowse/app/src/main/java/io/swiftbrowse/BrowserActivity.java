package io.swiftbrowse;

import android.app.Activity;
import android.os.Bundle;
import android.view.KeyEvent;
import android.webkit.WebView;
import android.widget.EditText;

import io.swiftbrowse.tabs.TabManager;

public class BrowserActivity extends Activity {
    private TabManager tabManager;
    private EditText urlBar;

    @Override
    protected void onCreate(Bundle savedInstanceState) {
        super.onCreate(savedInstanceState);
        setContentView(R.layout.activity_browser);
        urlBar = findViewById(R.id.url_bar);
        tabManager = new TabManager(this, findViewById(R.id.web_container));
        tabManager.openTab("https://duckduckgo.com", false);
        urlBar.setOnEditorActionListener((v, actionId, event) -> {
            loadUrl(urlBar.getText().toString());
            return true;
        });
    }

    private void loadUrl(String input) {
        String url = input.contains("://") ? input : "https://duckduckgo.com/?q=" + input;
        WebView view = tabManager.currentTab().getWebView();
        view.loadUrl(url);
    }

    @Override
    public boolean onKeyDown(int keyCode, KeyEvent event) {
        WebView view = tabManager.currentTab().getWebView();
        if (keyCode == KeyEvent.KEYCODE_BACK && view.canGoBack()) {
            view.goBack();
            return true;
        }
        return super.onKeyDown(keyCode, event);
    }
}
